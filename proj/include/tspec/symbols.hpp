#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tspec/fourier.hpp"

namespace tspec {

/// Default truncation order for the log-coefficients of smooth symbols.
inline constexpr int kDefaultLogOrder = 64;

/// f = e^V with V real-valued and smooth, f strictly increasing on (0, θ̃) and
/// strictly decreasing on (θ̃, 2π). The minimum L sits at θ = 0 and the maximum
/// M at θ̃; both extrema are non-degenerate.
///
/// The symbol is carried by the truncated Fourier series of V. Unimodality and
/// the extremum conditions are certified numerically on construction; a
/// DomainError is thrown if they fail.
class SmoothUnimodalSymbol {
 public:
  static SmoothUnimodalSymbol from_log_coeffs(FourierSeries log_coeffs, std::string name = {});
  /// Samples `log_f` on the default grid and keeps `order` coefficients.
  static SmoothUnimodalSymbol from_log_function(const std::function<double(double)>& log_f,
                                                int order = kDefaultLogOrder,
                                                std::string name = {});

  /// f = 3 - 2 cos θ.
  static SmoothUnimodalSymbol tridiag3();
  /// f = e^{-cos θ}.
  static SmoothUnimodalSymbol expcos();
  /// f = |1 + r e^{iθ}|^{-2c} with r = 9/10 and c chosen so that Σ k V_k V_{-k} = 1/4:
  /// V_k = c(-r)^{|k|}/|k|, kept to order 512. Its coefficients decay slowly enough
  /// that finite-n corrections stay visible above rounding for n up to about 300.
  static SmoothUnimodalSymbol slowdecay();

  const std::string& name() const { return name_; }
  const FourierSeries& log_coeffs() const { return log_coeffs_; }

  double value(double theta) const;
  double log_value(double theta) const;
  double log_derivative(double theta) const;
  double second_derivative(double theta) const;

  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }
  double theta_max() const { return theta_max_; }

  /// f sampled on the default grid θ_l = 2πl/kDefaultGridSize.
  const std::vector<double>& grid_values() const { return grid_values_; }

  /// Σ_{|k| > K/2} |V_k|.
  double truncation_tail() const { return truncation_tail_; }

  /// Fourier coefficients f_k for |k| <= max_index, from an FFT of e^V.
  FourierSeries toeplitz_coeffs(int max_index) const;

 private:
  SmoothUnimodalSymbol() = default;
  void certify();

  std::string name_;
  FourierSeries log_coeffs_;
  std::vector<double> grid_values_;
  double min_value_ = 0.0;
  double max_value_ = 0.0;
  double theta_max_ = 0.0;
  double truncation_tail_ = 0.0;
};

struct RationalArc {
  int p = 0;
  int q = 0;
};

/// f = e^{2πγ} on [θ1, θ2) and 1 elsewhere, with 0 < θ1 < θ2 < 2π and γ > 0.
class TwoLevelSymbol {
 public:
  static TwoLevelSymbol from_angles(double theta1, double theta2, double gamma);
  /// θ2 = θ1 + 2πp/q with coprime 0 < p < q.
  static TwoLevelSymbol from_rational_arc(double theta1, int p, int q, double gamma);
  /// Levels 1 and 2, arc [π/2, π): p/q = 1/4, γ = ln 2 / (2π).
  static TwoLevelSymbol p1q4();

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  double gamma() const { return gamma_; }
  double high() const;
  double arc_length() const { return theta2_ - theta1_; }
  const std::optional<RationalArc>& rational_arc() const { return arc_; }

  double value(double theta) const;

  /// Closed-form Fourier coefficients for |k| <= max_index.
  FourierSeries toeplitz_coeffs(int max_index) const;

  /// The symbol with the roles of the arc and its complement exchanged (levels
  /// swapped). The new arc is centred on π; spectra are rotation invariant.
  TwoLevelSymbol complementary() const;

 private:
  TwoLevelSymbol(double theta1, double theta2, double gamma, std::optional<RationalArc> arc);

  double theta1_;
  double theta2_;
  double gamma_;
  std::optional<RationalArc> arc_;
};

/// One Fisher-Hartwig point: z = e^{iθ}, root-type exponent α, jump parameter β.
struct Singularity {
  double theta = 0.0;
  Complex alpha;
  Complex beta;

  Complex z() const { return std::polar(1.0, theta); }
  bool trivial() const { return alpha == Complex{} && beta == Complex{}; }
};

/// Symbol data e^{V(z)} z^{Σβ_j} Π|z - z_j|^{2α_j} g_{z_j,β_j}(z) z_j^{-β_j}.
///
/// singularities[0] is always z_0 = 1 (possibly trivial). Powers of points on the
/// circle use the angles directly: z_j^s = e^{isθ_j} with θ_j in [0, 2π).
///
/// The β_j are not unique for a given symbol: shifting them by integers that sum
/// to zero multiplies the symbol by a product of z_j powers. Descriptors built by
/// shift_smooth() and shift_two_level() store the representation F whose lowered
/// companion F⁻ (β_2 - 1) equals f - λ.
struct FHDescriptor {
  FourierSeries v;
  std::vector<Singularity> singularities;

  /// Checks Re α_j > -1/2 and 0 = θ_0 < θ_1 < ... < θ_m < 2π.
  void validate() const;
  std::size_t m() const { return singularities.empty() ? 0 : singularities.size() - 1; }

  /// Value of the symbol at e^{iθ}, θ in [0, 2π), away from the singular points.
  Complex evaluate(double theta) const;

  /// Copy with β_j lowered by one.
  FHDescriptor lowered(std::size_t j) const;
};

/// max_{j,k} |Re β_j - Re β_k|; index 0 takes part only if z_0 = 1 is singular.
double beta_seminorm(const FHDescriptor& desc);

struct RootAngles {
  double theta1;
  double theta2;
};

/// The two solutions 0 < θ1 < θ̃ < θ2 < 2π of f(e^{iθ}) = λ, by bisection on the
/// monotone branches. Throws DomainError unless L < λ < M.
RootAngles root_angles(const SmoothUnimodalSymbol& sym, double lam);

/// ln R(e^{iθ}; λ) for R = -(f - λ) / (4 sin((θ-θ1)/2) sin((θ-θ2)/2)), expanded in
/// a Fourier series.
struct SmoothShift {
  double lam = 0.0;
  RootAngles roots{};
  FourierSeries log_r;
  /// Σ_{|k| > K/2} of the ln R coefficients.
  double log_r_tail = 0.0;
  /// Smallest sampled value of R.
  double min_r = 0.0;
};

/// Half-width of the window around θ1, θ2 inside which R is replaced by the
/// chord through R(θ_j ± h).
inline constexpr double kRemovableStep = 1e-5;

double shifted_ratio(const SmoothUnimodalSymbol& sym, const RootAngles& roots, double lam,
                     double theta);
SmoothShift shift_smooth_log_r(const SmoothUnimodalSymbol& sym, double lam,
                               std::size_t grid_size = kDefaultGridSize);

/// Descriptor F with z_1, z_2 at the roots, α_1 = α_2 = β_1 = β_2 = 1/2 and
/// V = ln R + i(θ1 - θ2)/2 + iπ; lowering β_2 gives f - λ.
FHDescriptor shift_smooth(const SmoothUnimodalSymbol& sym, double lam);

/// γ^(λ) with e^{2πγ^(λ)} = (e^{2πγ} - λ)/(λ - 1). Throws DomainError unless
/// 1 < λ < e^{2πγ}.
double gamma_lambda(double gamma, double lam);

/// Descriptor F with α = 0, β_1 = 1/2 + iγ^(λ), β_2 = 1/2 - iγ^(λ) and constant
/// e^{V_0} = e^{iπ}(λ - 1)(z_1/z_2)^{β_1}; lowering β_2 gives f - λ.
FHDescriptor shift_two_level(const TwoLevelSymbol& sym, double lam);

/// Near-period q of a symbol with rational arc 2πp/q.
int near_period(const TwoLevelSymbol& sym);

/// ω(ℓ, m): m if ℓ and m are odd, 2m if either is even; ω(0, m) = 2.
int omega(int l, int m);

/// Reduced arc fraction (m - ℓ)/(2m) of [s, π) for s = πℓ/m, 0 <= ℓ < m.
RationalArc arc_fraction_from_jump(int l, int m);

}  // namespace tspec
