#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tspec/errors.hpp"
#include "tspec/gap_asymptotics.hpp"
#include "tspec/oracle.hpp"
#include "tspec/slepian.hpp"

using namespace tspec;
using std::numbers::pi;

namespace {

// |S||T|c = 2π·periods with c = 16, s2 = 1.
SlepianSetup with_periods(double periods) {
  SlepianSetup s;
  s.t1 = pi;
  s.t2 = pi + 2 * pi * periods / s.c;
  return s;
}

}  // namespace

TEST_SUITE("slepian") {

TEST_CASE("index formula") {
  CHECK(slepian_index(with_periods(10.0)) == 10);
  CHECK(slepian_index(with_periods(10.5)) == 10);
  auto s = with_periods(10.0);
  s.b = 3.0 * pi * pi / std::log(s.c);
  CHECK(slepian_index(s) == 13);
  s.b = -60.0 * pi * pi / std::log(s.c);
  CHECK_THROWS_AS(slepian_index(s), DomainError);
  CHECK(slepian_index(SlepianSetup{}) == 64);
}

TEST_CASE("matrix size and diagonal") {
  SlepianSetup s;
  CHECK(s.n() == 256);
  CHECK(s.with_size(1024).n() == 1024);
  auto t = slepian_matrix(s);
  CHECK(t.n == 256);
  CHECK(t.is_real());
  CHECK(std::abs(t.coeffs[0].real() - s.delta * (s.t2 - s.t1) / (2 * pi)) < 1e-15);
  for (int k = 1; k < 10; ++k) CHECK(t.coeffs[k] == t.coeffs[-k]);
}

TEST_CASE("invalid setups") {
  SlepianSetup full;
  full.t1 = 0.0;
  full.t2 = 2 * pi / full.delta;
  CHECK_THROWS_AS(validate(full), DomainError);
  CHECK_THROWS_AS(slepian_matrix(full), DomainError);
  SlepianSetup tiny;
  tiny.c = 0.25;
  CHECK_THROWS_AS(validate(tiny), DomainError);
}

TEST_CASE("spectrum lies in (0, 1)") {
  auto ev = hermitian_eigenvalues(slepian_matrix(SlepianSetup{})).eigenvalues;
  // The extreme eigenvalues are within rounding of 0 and 1.
  CHECK(ev.front() > -1e-13);
  CHECK(ev.back() < 1.0 + 1e-13);
  CHECK(ev[ev.size() / 2] > 0.0);
}

TEST_CASE("affine relation to the two-level symbol") {
  SlepianSetup s = SlepianSetup{}.with_size(128);
  const double arc = s.delta * (s.t2 - s.t1);
  auto two = TwoLevelSymbol::from_angles(0.9, 0.9 + arc, std::log(2.0) / (2 * pi));
  auto a = hermitian_eigenvalues(slepian_matrix(s)).eigenvalues;
  auto b = two_level_spectrum(two, s.n()).eigenvalues;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] + 1.0 - b[i]) < 1e-12);
}

TEST_CASE("limit check at b = 0") {
  auto rep = slepian_limit_check(SlepianSetup{}, {256, 1024});
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.monotone);
  CHECK(rep.rows[1].deviation < rep.rows[0].deviation);
  CHECK(rep.rows[1].target == 0.5);
  CHECK(rep.rows[1].deviation < 0.2);
  CHECK(to_string(rep.indexing).size() > 0);
}

}  // TEST_SUITE
