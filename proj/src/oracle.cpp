#include "tspec/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tspec/errors.hpp"

namespace tspec {

namespace {
constexpr int kMaxEigenSize = 8192;
constexpr int kMaxDetSize = 2048;
}  // namespace

bool ToeplitzMatrix::is_real() const {
  return std::all_of(coeffs.data().begin(), coeffs.data().end(),
                     [](Complex c) { return c.imag() == 0.0; });
}

double ToeplitzMatrix::hermitian_defect() const {
  double scale = 0.0;
  for (auto c : coeffs.data()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double defect = std::abs(coeffs[0].imag());
  for (int k = 1; k < n; ++k) defect = std::max(defect, std::abs(coeffs[-k] - std::conj(coeffs[k])));
  return defect / scale;
}

std::vector<Complex> ToeplitzMatrix::dense() const {
  std::vector<Complex> a(std::size_t(n) * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) a[j + std::size_t(k) * n] = coeffs[j - k];
  return a;
}

ToeplitzMatrix build_toeplitz(const FourierSeries& coeffs, int n) {
  if (n < 1) throw PreconditionError("build_toeplitz: n must be positive");
  if (coeffs.order() < n - 1) {
    throw PreconditionError("build_toeplitz: coefficients missing for |k| <= " +
                            std::to_string(n - 1));
  }
  FourierSeries trimmed(n - 1);
  for (int k = -(n - 1); k <= n - 1; ++k) trimmed.at(k) = coeffs[k];
  return {n, std::move(trimmed)};
}

ExactSpectrum hermitian_eigenvalues(const ToeplitzMatrix& t) {
  if (t.n > kMaxEigenSize) throw PreconditionError("hermitian_eigenvalues: n > 8192");
  if (t.hermitian_defect() > 1e-13) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const int n = t.n;
  ExactSpectrum out{n, std::vector<double>(n)};
  lapack_int info;
  if (t.is_real()) {
    std::vector<double> a(std::size_t(n) * n);
    for (int k = 0; k < n; ++k)
      for (int j = k; j < n; ++j) a[j + std::size_t(k) * n] = t.coeffs[j - k].real();
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, out.eigenvalues.data());
  } else {
    std::vector<lapack_complex_double> a(std::size_t(n) * n);
    for (int k = 0; k < n; ++k)
      for (int j = k; j < n; ++j) {
        Complex c = t.coeffs[j - k];
        if (j == k) c = c.real();
        a[j + std::size_t(k) * n] = lapack_make_complex_double(c.real(), c.imag());
      }
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, out.eigenvalues.data());
  }
  if (info != 0) {
    throw InternalConsistencyError("hermitian_eigenvalues: LAPACK info " + std::to_string(info));
  }
  return out;
}

ExactSpectrum tridiag_closed_form(int n, double diag, double offdiag) {
  if (n < 1) throw PreconditionError("tridiag_closed_form: n must be positive");
  ExactSpectrum out{n, std::vector<double>(n)};
  for (int j = 1; j <= n; ++j) {
    out.eigenvalues[j - 1] = diag + 2.0 * offdiag * std::cos(j * std::numbers::pi / (n + 1));
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

Complex LogDet::value() const { return singular ? Complex{} : std::exp(log()); }

LogDet dense_determinant(std::vector<Complex> a, int n) {
  std::vector<lapack_int> piv(n);
  lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n,
                                   reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                   piv.data());
  if (info < 0) throw InternalConsistencyError("toeplitz_determinant: zgetrf argument error");
  LogDet d;
  if (info > 0) {
    d.singular = true;
    d.log_abs = -INFINITY;
    return d;
  }
  int swaps = 0;
  for (int i = 0; i < n; ++i) {
    Complex u = a[i + std::size_t(i) * n];
    d.log_abs += std::log(std::abs(u));
    d.phase += std::arg(u);
    if (piv[i] != i + 1) ++swaps;
  }
  if (swaps % 2) d.phase += std::numbers::pi;
  d.phase = std::remainder(d.phase, 2.0 * std::numbers::pi);
  return d;
}

LogDet toeplitz_determinant(const FourierSeries& coeffs, int n) {
  if (n > kMaxDetSize) throw PreconditionError("toeplitz_determinant: n > 2048");
  return dense_determinant(build_toeplitz(coeffs, n).dense(), n);
}

FourierSeries shift_coeffs(const FourierSeries& coeffs, Complex lam) {
  FourierSeries out = coeffs;
  out.at(0) -= lam;
  return out;
}

FourierSeries raise_beta_coeffs(const FourierSeries& f_minus, double theta) {
  const int order = f_minus.order() + 1;
  const Complex factor = -std::polar(1.0, -theta);
  FourierSeries out(order);
  for (int k = -order; k <= order; ++k) out.at(k) = factor * f_minus[k - 1];
  return out;
}

FourierSeries rotate_coeffs(const FourierSeries& coeffs, double phi) {
  FourierSeries out = coeffs;
  for (int k = -coeffs.order(); k <= coeffs.order(); ++k) out.at(k) *= std::polar(1.0, k * phi);
  return out;
}

Complex phi_hat_zero_exact(const FourierSeries& f, const FourierSeries& f_minus,
                           double theta_j0, int n) {
  LogDet d = toeplitz_determinant(f, n);
  if (d.singular) throw DomainError("phi_hat_zero_exact: D_n(F) vanishes");
  LogDet dm = toeplitz_determinant(f_minus, n);
  if (dm.singular) return {};
  return std::exp(dm.log() - d.log() - Complex(0.0, n * theta_j0));
}

}  // namespace tspec
