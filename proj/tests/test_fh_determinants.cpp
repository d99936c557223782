#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <fftw3.h>

#include "tspec/errors.hpp"
#include "tspec/fh_determinants.hpp"
#include "tspec/oracle.hpp"
#include "tspec/report_io.hpp"
#include "tspec/symbols.hpp"

using namespace tspec;
using std::numbers::pi;

namespace {

double rel_log_error(const LogDet& exact, const AsymptoticDet& asym) {
  return std::abs(std::exp(exact.log() - asym.log()) - 1.0);
}

}  // namespace

TEST_SUITE("fh_determinants") {

TEST_CASE("nu factors of the two-root descriptor") {
  auto d = shift_smooth(SmoothUnimodalSymbol::expcos(), 1.4);
  const double t1 = d.singularities[1].theta, t2 = d.singularities[2].theta;
  const double chord = std::abs(std::polar(1.0, t1) - std::polar(1.0, t2));
  const Complex nu1 = Complex(0, 1) * std::polar(1.0, 0.5 * (t1 - t2)) * chord;
  const Complex nu2 = Complex(0, -1) * std::polar(1.0, 0.5 * (t2 - t1)) * chord;
  CHECK(std::abs(nu_factor(d, 1) - nu1) < 1e-13);
  CHECK(std::abs(nu_factor(d, 2) - nu2) < 1e-13);

  FHDescriptor plain;
  plain.singularities = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {4.0, 0.0, 0.0}};
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(nu_factor(plain, j) - 1.0) < 1e-15);
  CHECK_THROWS_AS(nu_factor(plain, 3), DomainError);
}

TEST_CASE("trivial descriptors") {
  FHDescriptor id;
  id.v = FourierSeries(0);
  id.singularities = {{0.0, 0.0, 0.0}};
  CHECK(asymptotic_phi_hat_zero(id, 10) == Complex{});
  auto a = asymptotic_log_det(id, 50);
  CHECK(a.log_magnitude == 0.0);
  CHECK(a.phase == 0.0);
}

TEST_CASE("strip and pole guards") {
  CHECK_THROWS_AS(asymptotic_log_det(pure_fh_descriptor(2.0, 0.0, -1.0), 10), DomainError);
  CHECK_THROWS_AS(asymptotic_phi_hat_zero(pure_fh_descriptor(2.0, 0.0, 0.7), 10), DomainError);
  CHECK_THROWS_AS(asymptotic_phi_hat_zero(pure_fh_descriptor(2.0, 0.0, -0.5), 10), DomainError);
  CHECK_NOTHROW(asymptotic_phi_hat_zero(pure_fh_descriptor(2.0, 0.0, 0.5), 10));
}

TEST_CASE("pure singularity coefficients match a fine FFT") {
  const double th = 2.3;
  const Complex alpha = 0.5, beta = 0.2;
  const int m = 1 << 16;
  std::vector<Complex> s(m), out(m);
  auto desc = pure_fh_descriptor(th, alpha, beta);
  for (int l = 0; l < m; ++l) {
    const double t = 2 * pi * l / m;
    s[l] = std::abs(std::remainder(t - th, 2 * pi)) < 1e-12 ? Complex{} : desc.evaluate(t);
  }
  fftw_plan plan = fftw_plan_dft_1d(m, reinterpret_cast<fftw_complex*>(s.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  auto c = pure_fh_coeffs(th, alpha, beta, 20);
  // |1 - w| has mean 4/π.
  CHECK(std::abs(pure_fh_coeffs(th, 0.5, 0.0, 0)[0] - 4.0 / pi) < 1e-13);
  for (int k = -20; k <= 20; ++k) {
    const Complex fft = out[(k + m) % m] / double(m);
    CAPTURE(k);
    CHECK(std::abs(c[k] - fft) < 1e-7);
  }
}

TEST_CASE("strong Szego limit") {
  auto s = SmoothUnimodalSymbol::slowdecay();
  // 25-digit values of log D_n for this symbol.
  const double ref16 = 0.249972106900306612082979;
  const double ref64 = 0.2499999999482318759976808;
  CHECK(std::abs(toeplitz_determinant(s.toeplitz_coeffs(16), 16).log_abs - ref16) < 1e-11);
  CHECK(std::abs(toeplitz_determinant(s.toeplitz_coeffs(64), 64).log_abs - ref64) < 1e-11);

  FHDescriptor d;
  d.v = s.log_coeffs();
  d.singularities = {{0.0, 0.0, 0.0}};
  const auto a = asymptotic_log_det(d, 32);
  CHECK(std::abs(a.log_magnitude - 0.25) < 1e-12);
  double prev = 1.0;
  for (int n : {16, 32, 64}) {
    const double e = std::abs(toeplitz_determinant(s.toeplitz_coeffs(n), n).log_abs - 0.25);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("pure singularity determinants converge at the predicted order") {
  const double th = 2.0;
  const Complex alpha = 0.3, beta = 0.2;
  auto d = pure_fh_descriptor(th, alpha, beta);
  std::vector<double> ns, errs;
  for (int n : {32, 64, 128, 256}) {
    auto ex = toeplitz_determinant(pure_fh_coeffs(th, alpha, beta, n), n);
    ns.push_back(n);
    errs.push_back(rel_log_error(ex, asymptotic_log_det(d, n)));
  }
  // One singular point with trivial z_0: seminorm 0.
  CHECK(beta_seminorm(d) == 0.0);
  CHECK(loglog_slope(ns, errs) <= -1.0 + 0.3);
}

TEST_CASE("two-level descriptor at mid-gap") {
  auto sym = TwoLevelSymbol::p1q4();
  const double lam = 1.5;
  auto d = shift_two_level(sym, lam);
  std::vector<double> ns, errs;
  for (int n : {32, 64, 128, 256}) {
    auto f = raise_beta_coeffs(shift_coeffs(sym.toeplitz_coeffs(n + 1), lam), sym.theta2());
    auto ex = toeplitz_determinant(f, n);
    ns.push_back(n);
    errs.push_back(rel_log_error(ex, asymptotic_log_det(d, n)));
  }
  CHECK(std::isfinite(asymptotic_log_det(d, 64).error_order));
  CHECK(loglog_slope(ns, errs) <= beta_seminorm(d) - 1.0 + 0.3);
  CHECK(errs.back() < errs.front());
}

TEST_CASE("phi hat predictions converge") {
  auto sym = TwoLevelSymbol::p1q4();
  const double lam = 1.5;
  auto d = shift_two_level(sym, lam);
  double prev = 1e300;
  for (int n : {24, 48, 96}) {
    auto fm = shift_coeffs(sym.toeplitz_coeffs(n + 1), lam);
    auto f = raise_beta_coeffs(fm, sym.theta2());
    const Complex ex = phi_hat_zero_exact(f, fm, sym.theta2(), n);
    const double e = std::abs(ex - asymptotic_phi_hat_zero(d, n));
    CAPTURE(n);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("consistency triangle") {
  const double th = 2.0;
  const Complex alpha = 0.3, beta = 0.2;
  const int n = 64;
  auto d = pure_fh_descriptor(th, alpha, beta);
  auto dm = d.lowered(1);
  auto f = pure_fh_coeffs(th, alpha, beta, n);
  auto fm = pure_fh_coeffs(th, alpha, beta - 1.0, n);
  const Complex log_ex_f = toeplitz_determinant(f, n).log();
  const Complex log_ex_fm = toeplitz_determinant(fm, n).log();
  const Complex ex_phi = phi_hat_zero_exact(f, fm, th, n);
  const Complex log_as_f = asymptotic_log_det(d, n).log();
  const Complex log_as_fm = asymptotic_log_det(dm, n).log();
  const Complex as_phi = asymptotic_phi_hat_zero(d, n);
  auto wrap = [](Complex z) { return Complex(z.real(), std::remainder(z.imag(), 2 * pi)); };
  const double env = std::abs(wrap(log_as_f - log_ex_f)) + std::abs(wrap(log_as_fm - log_ex_fm)) +
                     std::abs(std::log(as_phi / ex_phi));
  const Complex mismatch =
      wrap(log_as_fm - (Complex(0.0, n * th) + std::log(as_phi) + log_as_f));
  CHECK(std::abs(mismatch) <= env + 1e-12);
  CHECK(env < 0.05);
}

}  // TEST_SUITE
