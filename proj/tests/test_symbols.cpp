#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "tspec/errors.hpp"
#include "tspec/oracle.hpp"
#include "tspec/symbols.hpp"

using namespace tspec;
using std::numbers::pi;

namespace {

// An asymmetric unimodal symbol: V'(0) = 0 but V is not even.
SmoothUnimodalSymbol skewed() {
  return SmoothUnimodalSymbol::from_log_function(
      [](double t) { return -std::cos(t) + 0.2 * std::sin(t) - 0.1 * std::sin(2.0 * t); }, 32,
      "skewed");
}

}  // namespace

TEST_SUITE("symbols") {

TEST_CASE("built-in smooth symbols") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  CHECK(std::abs(t.min_value() - 1.0) < 1e-12);
  CHECK(std::abs(t.max_value() - 5.0) < 1e-12);
  CHECK(std::abs(t.theta_max() - pi) < 1e-9);
  auto e = SmoothUnimodalSymbol::expcos();
  CHECK(std::abs(e.min_value() - std::exp(-1.0)) < 1e-14);
  CHECK(std::abs(e.max_value() - std::exp(1.0)) < 1e-13);
  for (const auto& s : {t, e}) CHECK(s.truncation_tail() < 1e-12);
  auto sl = SmoothUnimodalSymbol::slowdecay();
  CHECK(std::abs(sl.log_coeffs()[1].real() - -0.9 * 0.38798982021202536) < 1e-15);
}

TEST_CASE("non-unimodal or misplaced symbols are rejected") {
  CHECK_THROWS_AS(SmoothUnimodalSymbol::from_log_function([](double t) { return std::cos(2 * t); }),
                  DomainError);
  CHECK_THROWS_AS(SmoothUnimodalSymbol::from_log_function([](double t) { return std::cos(t); }),
                  DomainError);
  CHECK_THROWS_AS(
      SmoothUnimodalSymbol::from_log_function([](double t) { return -std::cos(t) + 0.3 * std::sin(t); }),
      DomainError);
  CHECK_NOTHROW(skewed());
}

TEST_CASE("root angles") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  auto r3 = root_angles(t, 3.0);
  CHECK(std::abs(r3.theta1 - pi / 2) < 1e-12);
  CHECK(std::abs(r3.theta2 - 3 * pi / 2) < 1e-12);
  auto r2 = root_angles(t, 2.0);
  CHECK(std::abs(r2.theta1 - pi / 3) < 1e-12);
  CHECK(std::abs(r2.theta2 - 5 * pi / 3) < 1e-12);
  CHECK_THROWS_AS(root_angles(t, 1.0), DomainError);
  CHECK_THROWS_AS(root_angles(t, 5.5), DomainError);

  auto s = skewed();
  const double mid = 0.5 * (s.min_value() + s.max_value());
  auto r = root_angles(s, mid);
  CHECK(0.0 < r.theta1);
  CHECK(r.theta1 < s.theta_max());
  CHECK(s.theta_max() < r.theta2);
  CHECK(r.theta2 < 2 * pi);
  CHECK(std::abs(s.value(r.theta1) - mid) < 1e-12);
  CHECK(std::abs(s.value(r.theta2) - mid) < 1e-12);
}

TEST_CASE("root angles move monotonically with lambda") {
  auto s = skewed();
  const double L = s.min_value(), M = s.max_value();
  RootAngles prev = root_angles(s, L + (M - L) / 201);
  for (int i = 2; i <= 200; ++i) {
    auto r = root_angles(s, L + (M - L) * i / 201);
    CHECK(r.theta1 > prev.theta1);
    CHECK(r.theta2 < prev.theta2);
    prev = r;
  }
}

TEST_CASE("shift of 3 - 2 cos has R identically 1") {
  auto t = SmoothUnimodalSymbol::tridiag3();
  for (double lam : {1.3, 2.0, 3.7, 4.9}) {
    auto sh = shift_smooth_log_r(t, lam);
    for (int k = -sh.log_r.order(); k <= sh.log_r.order(); ++k) CHECK(std::abs(sh.log_r[k]) < 1e-12);
    auto d = shift_smooth(t, lam);
    const Complex want(0.0, 0.5 * (d.singularities[1].theta - d.singularities[2].theta) + pi);
    CHECK(std::abs(d.v[0] - want) < 1e-12);
  }
}

TEST_CASE("R stays positive across the range") {
  for (const auto& s : {SmoothUnimodalSymbol::expcos(), skewed(), SmoothUnimodalSymbol::slowdecay()}) {
    const double L = s.min_value(), M = s.max_value();
    for (int i = 1; i < 20; ++i) {
      auto sh = shift_smooth_log_r(s, L + (M - L) * i / 20);
      CHECK(sh.min_r > 0.0);
    }
  }
}

TEST_CASE("shifted descriptor reconstructs f - lambda") {
  for (const auto& s : {SmoothUnimodalSymbol::tridiag3(), SmoothUnimodalSymbol::expcos(), skewed(),
                        SmoothUnimodalSymbol::slowdecay()}) {
    const double L = s.min_value(), M = s.max_value();
    for (double frac : {0.1, 0.5, 0.85}) {
      const double lam = L + frac * (M - L);
      auto fm = shift_smooth(s, lam).lowered(2);
      double worst = 0.0;
      for (int l = 0; l < 500; ++l) {
        const double t = 2 * pi * (l + 0.37) / 500;
        worst = std::max(worst, std::abs(fm.evaluate(t) - (s.value(t) - lam)));
      }
      CAPTURE(s.name());
      CAPTURE(frac);
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("beta seminorm") {
  FHDescriptor one;
  one.singularities = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.5}};
  // A lone singular point has nothing to compare with once the trivial z_0 is dropped.
  CHECK(beta_seminorm(one) == 0.0);
  FHDescriptor two;
  two.singularities = {{0.0, 0.0, 0.0}, {1.0, 0.0, {0.5, 0.3}}, {2.0, 0.0, {0.5, -0.3}}};
  CHECK(beta_seminorm(two) == 0.0);
  auto thm1 = shift_smooth(SmoothUnimodalSymbol::expcos(), 1.2);
  CHECK(beta_seminorm(thm1) == 0.0);
  two.singularities[0].alpha = 0.25;
  CHECK(beta_seminorm(two) == doctest::Approx(0.5));
  FHDescriptor none;
  none.singularities = {{0.0, 0.0, 0.0}};
  CHECK(beta_seminorm(none) == 0.0);
}

TEST_CASE("descriptor validation") {
  FHDescriptor d;
  d.singularities = {{0.0, 0.0, 0.0}, {2.0, -0.6, 0.0}};
  CHECK_THROWS_AS(d.validate(), DomainError);
  d.singularities = {{0.0, 0.0, 0.0}, {2.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(d.validate(), DomainError);
}

TEST_CASE("two-level shift") {
  const double g = std::log(2.0) / (2 * pi);
  CHECK(std::abs(gamma_lambda(g, 1.5)) < 1e-15);
  CHECK(std::abs(gamma_lambda(g, 4.0 / 3.0) - g) < 1e-14);
  CHECK_THROWS_AS(gamma_lambda(g, 1.0), DomainError);
  CHECK_THROWS_AS(gamma_lambda(g, 2.0), DomainError);
  CHECK(gamma_lambda(g, 1.0 + 1e-12) > 4.0);

  auto sym = TwoLevelSymbol::p1q4();
  CHECK(sym.high() == doctest::Approx(2.0));
  for (double lam : {1.1, 1.5, 1.83}) {
    auto fm = shift_two_level(sym, lam).lowered(2);
    for (int l = 0; l < 400; ++l) {
      const double t = 2 * pi * (l + 0.31) / 400;
      CHECK(std::abs(fm.evaluate(t) - (sym.value(t) - lam)) < 1e-12);
    }
  }
}

TEST_CASE("near period and omega") {
  auto half = TwoLevelSymbol::from_rational_arc(0.5, 1, 2, 0.1);
  CHECK(near_period(half) == 2);
  CHECK(omega(0, 5) == 2);
  for (int m = 1; m <= 12; ++m) {
    for (int l = 0; l < m; ++l) {
      if (std::gcd(l, m) != 1 && l != 0) continue;
      auto arc = arc_fraction_from_jump(l, m);
      CAPTURE(l);
      CAPTURE(m);
      CHECK(arc.q == omega(l, m));
      if (l % 2 == 1 && m % 2 == 1) CHECK(omega(l, m) == m);
      if (l != 0 && (l % 2 == 0 || m % 2 == 0)) CHECK(omega(l, m) == 2 * m);
    }
  }
  CHECK_THROWS_AS(near_period(TwoLevelSymbol::from_angles(0.5, 0.5 + std::sqrt(2.0), 0.1)),
                  UnsupportedError);
  CHECK_THROWS_AS(TwoLevelSymbol::from_rational_arc(0.5, 2, 4, 0.1), DomainError);
  CHECK_THROWS_AS(TwoLevelSymbol::from_angles(0.0, 1.0, 0.1), DomainError);
}

TEST_CASE("complementary arc keeps the near period and the spectrum up to levels") {
  for (auto [p, q] : {std::pair{1, 4}, std::pair{2, 5}, std::pair{3, 7}}) {
    auto s = TwoLevelSymbol::from_rational_arc(0.4, p, q, 0.2);
    auto c = s.complementary();
    REQUIRE(c.rational_arc());
    CHECK(c.rational_arc()->p == q - p);
    CHECK(near_period(c) == q);
    CHECK(std::abs(c.arc_length() - (2 * pi - s.arc_length())) < 1e-12);
  }
}

TEST_CASE("real symbols give Hermitian Toeplitz matrices") {
  auto t = build_toeplitz(SmoothUnimodalSymbol::expcos().toeplitz_coeffs(20), 20);
  CHECK(t.hermitian_defect() < 1e-15);
  auto u = build_toeplitz(TwoLevelSymbol::p1q4().toeplitz_coeffs(20), 20);
  CHECK(u.hermitian_defect() < 1e-15);
}

}  // TEST_SUITE
