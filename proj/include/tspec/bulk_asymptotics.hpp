#pragma once

#include <optional>
#include <vector>

#include "tspec/oracle.hpp"
#include "tspec/symbols.hpp"

namespace tspec {

struct PhaseFunctions {
  double lam = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double psi = 0.0;
  double theta = 0.0;
  double z_shift = 0.0;
  /// (ln R)_0 = ∫ ln R dθ/2π.
  double log_r_mean = 0.0;
  /// Σ_{k>=1} k |(ln R)_k|².
  double weighted_square = 0.0;
  double truncation_tail = 0.0;
};

PhaseFunctions phase_functions(const SmoothUnimodalSymbol& sym, double lam);

/// Ψ(λ) = (θ1 - θ2)/2 + π.
double psi(const SmoothUnimodalSymbol& sym, double lam);
/// Ψ as the mean of Im ln(f - λ) over the circle, integrated cell by cell on the grid.
double psi_quadrature(const SmoothUnimodalSymbol& sym, double lam,
                      std::size_t grid_size = kDefaultGridSize);

/// Θ(λ) = Im Σ_{k>=1} V_k (z_1^k - z_2^k).
double theta(const SmoothUnimodalSymbol& sym, double lam);
/// Θ from the Fourier coefficients of ln|f - λ|, minus Ψ, plus π/2. The logarithmic
/// singularities are handled in closed form; the smooth remainder is transformed on
/// a grid of its own.
double theta_from_log_abs(const SmoothUnimodalSymbol& sym, double lam,
                          std::size_t grid_size = 2 * kDefaultGridSize);
/// Im Σ_{k>=1} k (ln f)_k (ln f)_{-k} - Ψ + π/2, with ln f on the branch that is
/// real on the arc (θ1, θ2).
double theta_from_log_product(const SmoothUnimodalSymbol& sym, double lam);

/// Z(λ) = -Re Σ_{k>=1} V_k (z_1^k + z_2^k).
double z_shift(const SmoothUnimodalSymbol& sym, double lam);

struct PredictedEigenvalue {
  int index = 0;
  double lam_hat = 0.0;
  double phase_residual = 0.0;
};

struct SpectrumPrediction {
  int n = 0;
  std::vector<PredictedEigenvalue> entries;
};

/// Solves (n+1)Ψ(λ) + Θ(λ) = jπ for j = 1..n by bisection on (L, M).
SpectrumPrediction predict_bulk_spectrum(const SmoothUnimodalSymbol& sym, int n);

/// E_n(λ) = D_n(f - λ)|z_1 - z_2| e^{-Z} exp(-n(ln R)_0 - Σ k|V_k|²)/2 from the exact
/// determinant.
double e_n_value(const SmoothUnimodalSymbol& sym, double lam, int n);
/// e_n(λ) = E_n(λ) - sin((n+1)Ψ + Θ). Requires n <= 512.
double e_n_residual(const SmoothUnimodalSymbol& sym, double lam, int n);

/// a(λ) = Ψ'(λ) ((λ-L)(M-λ))^{1/2} and b(λ) = Θ'(λ) ((λ-L)(M-λ))^{1/2}, by
/// central differences.
double a_coefficient(const SmoothUnimodalSymbol& sym, double lam);
double b_coefficient(const SmoothUnimodalSymbol& sym, double lam);

struct CorollaryReport {
  int n = 0;
  double eps = 0.0;
  double a_min = 0.0;
  double a_max = 0.0;
  double b_min = 0.0;
  double b_max = 0.0;
  /// n (λ_{j+1} - λ_j) for 2ε < j/n < 1 - 2ε.
  double spacing_min = 0.0;
  double spacing_max = 0.0;
  /// (λ_j - L)/(M - L) n²/j² for j/n <= 2ε, with the bounds 1/a_max² and π²/(4 a_min²).
  std::vector<double> edge_ratios;
  double edge_lower = 0.0;
  double edge_upper = 0.0;
};

/// Requires 0 < eps < a_min/2. Uses `exact` if given, otherwise solves densely.
CorollaryReport corollary_report(const SmoothUnimodalSymbol& sym, int n, double eps,
                                 const std::optional<ExactSpectrum>& exact = std::nullopt);

ExactSpectrum exact_spectrum(const SmoothUnimodalSymbol& sym, int n);

}  // namespace tspec
