#pragma once

#include <vector>

#include "tspec/fourier.hpp"

namespace tspec {

/// T_n(f) = (f_{j-k})_{j,k=0}^{n-1}, stored through its symbol coefficients.
struct ToeplitzMatrix {
  int n = 0;
  FourierSeries coeffs;

  Complex entry(int j, int k) const { return coeffs[j - k]; }
  bool is_real() const;
  /// max_k |c_{-k} - conj(c_k)| relative to max_k |c_k|.
  double hermitian_defect() const;
  /// Column-major dense copy.
  std::vector<Complex> dense() const;
};

/// Requires coefficients for |k| <= n - 1.
ToeplitzMatrix build_toeplitz(const FourierSeries& coeffs, int n);

struct ExactSpectrum {
  int n = 0;
  std::vector<double> eigenvalues;  // ascending
};

/// All eigenvalues of a Hermitian Toeplitz matrix (LAPACK divide and conquer;
/// the real symmetric driver is used when every coefficient is real).
/// Throws DomainError for non-Hermitian input and PreconditionError for n > 8192.
ExactSpectrum hermitian_eigenvalues(const ToeplitzMatrix& t);

/// diag + 2 offdiag cos(jπ/(n+1)), j = 1..n, ascending.
ExactSpectrum tridiag_closed_form(int n, double diag, double offdiag);

/// det in log-polar form: det = exp(log_abs + i phase).
struct LogDet {
  double log_abs = 0.0;
  double phase = 0.0;
  bool singular = false;

  Complex log() const { return {log_abs, phase}; }
  /// exp(log_abs) e^{i phase}; 0 when singular.
  Complex value() const;
};

/// LU with partial pivoting. Exactly singular matrices give singular = true and
/// log_abs = -inf. Requires n <= 2048.
LogDet toeplitz_determinant(const FourierSeries& coeffs, int n);
LogDet dense_determinant(std::vector<Complex> a, int n);

/// Coefficients of f - λ.
FourierSeries shift_coeffs(const FourierSeries& coeffs, Complex lam);

/// Coefficients of -e^{-iθ} z F⁻(z), i.e. F⁻ with β at e^{iθ} raised by one.
FourierSeries raise_beta_coeffs(const FourierSeries& f_minus, double theta);

/// Coefficients of f(e^{i(θ+φ)}): c_k e^{ikφ}. T_n of the result is unitarily
/// similar to T_n(f).
FourierSeries rotate_coeffs(const FourierSeries& coeffs, double phi);

/// Φ̂_n(0) = D_n(F⁻) / (z_{j0}^n D_n(F)) with z_{j0} = e^{iθ_{j0}}.
/// Throws DomainError if D_n(F) vanishes.
Complex phi_hat_zero_exact(const FourierSeries& f, const FourierSeries& f_minus,
                           double theta_j0, int n);

}  // namespace tspec
