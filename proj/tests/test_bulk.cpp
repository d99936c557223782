#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tspec/bulk_asymptotics.hpp"
#include "tspec/errors.hpp"
#include "tspec/oracle.hpp"

using namespace tspec;
using std::numbers::pi;

namespace {

SmoothUnimodalSymbol skewed() {
  return SmoothUnimodalSymbol::from_log_function(
      [](double t) { return -std::cos(t) + 0.2 * std::sin(t) - 0.1 * std::sin(2.0 * t); }, 32,
      "skewed");
}

double mid(const SmoothUnimodalSymbol& s, double frac = 0.5) {
  return s.min_value() + frac * (s.max_value() - s.min_value());
}

}  // namespace

TEST_SUITE("bulk") {

TEST_CASE("psi") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  CHECK(std::abs(psi(t, 3.0) - pi / 2) < 1e-12);
  CHECK(psi(t, 1.0 + 1e-6) < 0.02);
  CHECK(psi(t, 5.0 - 1e-6) > pi - 0.02);
  CHECK_THROWS_AS(psi(t, 0.5), DomainError);
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    for (double frac : {0.05, 0.3, 0.5, 0.77, 0.96}) {
      CHECK(std::abs(psi(s, mid(s, frac)) - psi_quadrature(s, mid(s, frac))) < 1e-8);
    }
  }
}

TEST_CASE("theta and z for 3 - 2 cos vanish") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  for (double lam : {1.2, 3.0, 4.4}) {
    CHECK(std::abs(theta(t, lam)) < 1e-12);
    CHECK(std::abs(z_shift(t, lam)) < 1e-12);
  }
}

TEST_CASE("theta vanishes at the edges") {
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    CHECK(std::abs(theta(s, s.min_value() + 1e-4)) < 0.05);
    CHECK(std::abs(theta(s, s.max_value() - 1e-4)) < 0.05);
  }
}

TEST_CASE("three forms of theta agree") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.03, 0.97);
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    for (int i = 0; i < 10; ++i) {
      const double lam = mid(s, u(rng));
      const double a = theta(s, lam);
      CAPTURE(lam);
      CHECK(std::abs(a - theta_from_log_abs(s, lam)) < 1e-8);
      CHECK(std::abs(a - theta_from_log_product(s, lam)) < 1e-8);
    }
  }
  // A non-even symbol has a genuinely nonzero Θ.
  CHECK(std::abs(theta(skewed(), mid(skewed(), 0.4))) > 1e-3);
}

TEST_CASE("phase is monotone") {
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    double prev_psi = -1.0, prev_g = -1e300;
    for (int i = 1; i <= 200; ++i) {
      const double lam = mid(s, i / 201.0);
      auto pf = phase_functions(s, lam);
      CHECK(pf.psi > prev_psi);
      CHECK(pf.psi > 0.0);
      CHECK(pf.psi < pi);
      const double g = 17 * pf.psi + pf.theta;
      CHECK(g > prev_g);
      prev_psi = pf.psi;
      prev_g = g;
    }
  }
}

TEST_CASE("tridiagonal prediction is exact") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  auto p = predict_bulk_spectrum(t, 64);
  auto c = tridiag_closed_form(64, 3.0, -1.0).eigenvalues;
  for (int j = 0; j < 64; ++j) {
    CHECK(std::abs(p.entries[j].lam_hat - c[j]) < 1e-9);
    CHECK(std::abs(p.entries[j].phase_residual) <= 1e-10);
    CHECK(p.entries[j].index == j + 1);
  }
  auto odd = predict_bulk_spectrum(t, 65);
  CHECK(std::abs(odd.entries[32].lam_hat - 3.0) < 1e-12);
  CHECK_THROWS_AS(predict_bulk_spectrum(t, 3), PreconditionError);
}

TEST_CASE("prediction pairs with the dense spectrum") {
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    for (int n : {64, 128}) {
      auto p = predict_bulk_spectrum(s, n);
      auto ex = exact_spectrum(s, n).eigenvalues;
      REQUIRE(p.entries.size() == ex.size());
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(p.entries[j].lam_hat - ex[j]));
        if (j > 0) CHECK(p.entries[j].lam_hat > p.entries[j - 1].lam_hat);
      }
      // Analytic symbols: the asymptotic error is below rounding already.
      CAPTURE(n);
      CHECK(worst < 1e-11);
    }
  }
}

TEST_CASE("slowly decaying symbol: prediction error decreases") {
  auto s = SmoothUnimodalSymbol::slowdecay();
  double prev = 1e300;
  for (int n : {16, 32, 64}) {
    auto p = predict_bulk_spectrum(s, n);
    auto ex = exact_spectrum(s, n).eigenvalues;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(p.entries[j].lam_hat - ex[j]));
    CAPTURE(n);
    CHECK(worst < prev);
    prev = worst;
  }
}

TEST_CASE("e_n at exact eigenvalues of 3 - 2 cos") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  const int n = 40;
  auto c = tridiag_closed_form(n, 3.0, -1.0).eigenvalues;
  for (int j : {3, 17, 30}) {
    CHECK(std::abs(e_n_value(t, c[j], n)) < 1e-9);
    CHECK(std::abs(e_n_residual(t, c[j], n)) < 1e-9);
  }
  CHECK_THROWS_AS(e_n_residual(t, 3.0, 600), PreconditionError);
}

TEST_CASE("e_n is small and shrinks") {
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed()}) {
    for (int n : {64, 128}) {
      const double d = (s.max_value() - s.min_value()) / (10.0 * n);
      double sup = 0.0;
      for (int i = 0; i <= 40; ++i) {
        const double lam = s.min_value() + d + (s.max_value() - s.min_value() - 2 * d) * i / 40.0;
        sup = std::max(sup, std::abs(e_n_residual(s, lam, n)));
      }
      CHECK(sup < 1e-9);
    }
  }
  auto sl = SmoothUnimodalSymbol::slowdecay();
  const double lam = mid(sl, 0.43);
  const double e32 = std::abs(e_n_residual(sl, lam, 32));
  const double e64 = std::abs(e_n_residual(sl, lam, 64));
  const double e128 = std::abs(e_n_residual(sl, lam, 128));
  CHECK(e64 < e32);
  CHECK(e128 < e64);
  CHECK(e32 < 0.2);
}

TEST_CASE("E_n alternates in sign between predicted eigenvalues") {
  auto s = skewed();
  const int n = 64;
  // Where G = (j + 1/2)π, sin G = (-1)^j.
  for (int j = 2; j < n - 2; j += 5) {
    double lo = s.min_value(), hi = s.max_value();
    for (int it = 0; it < 80; ++it) {
      const double m = 0.5 * (lo + hi);
      auto pf = phase_functions(s, m);
      ((n + 1) * pf.psi + pf.theta < (j + 0.5) * pi ? lo : hi) = m;
    }
    const double e = e_n_value(s, 0.5 * (lo + hi), n);
    CAPTURE(j);
    CHECK(e * (j % 2 == 0 ? 1.0 : -1.0) > 0.5);
  }
}

TEST_CASE("corollary coefficients") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  for (double lam : {1.5, 3.0, 4.2}) {
    CHECK(std::abs(a_coefficient(t, lam) - 1.0) < 1e-4);
    CHECK(std::abs(b_coefficient(t, lam)) < 1e-4);
  }
  auto r = corollary_report(t, 128, 0.1);
  CHECK(r.a_min == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.a_max == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.spacing_min >= 2.0);
  CHECK(r.spacing_max <= 7.0);
  CHECK_FALSE(r.edge_ratios.empty());
  CHECK_THROWS_AS(corollary_report(t, 128, 0.6), PreconditionError);
}

TEST_CASE("edge scaling") {
  for (const auto& s : {SmoothUnimodalSymbol::tridiag3(), SmoothUnimodalSymbol::expcos()}) {
    const double a = exact_spectrum(s, 64).eigenvalues[0] - s.min_value();
    const double b = exact_spectrum(s, 128).eigenvalues[0] - s.min_value();
    CHECK(a / b >= 3.2);
    CHECK(a / b <= 4.8);
  }
}

}  // TEST_SUITE
