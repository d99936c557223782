#include "tspec/slepian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tspec/errors.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;

int snap_floor(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? int(r) : int(std::floor(x));
}

double arc_length(const SlepianSetup& s) { return s.delta * (s.t2 - s.t1); }

}  // namespace

int SlepianSetup::n() const { return snap_floor(c * s2 / delta); }

SlepianSetup SlepianSetup::with_size(int size) const {
  SlepianSetup out = *this;
  out.c = size * delta / s2;
  return out;
}

void validate(const SlepianSetup& s) {
  if (!(s.delta > 0.0) || !(s.s2 > 0.0) || !(s.c > 0.0)) {
    throw DomainError("slepian: c, s2 and delta must be positive");
  }
  const double arc = arc_length(s);
  if (!(arc > 0.0) || !(arc < 2.0 * kPi)) {
    throw DomainError("slepian: delta (t2 - t1) must lie in (0, 2 pi)");
  }
  if (s.n() < 8) throw DomainError("slepian: matrix size [c s2/delta] below 8");
}

ToeplitzMatrix slepian_matrix(const SlepianSetup& setup) {
  validate(setup);
  const int n = setup.n();
  const double arc = arc_length(setup);
  FourierSeries c(n - 1);
  c.at(0) = arc / (2.0 * kPi);
  for (int k = 1; k < n; ++k) {
    const double v = std::sin(0.5 * k * arc) / (kPi * k);
    c.at(k) = v;
    c.at(-k) = v;
  }
  return build_toeplitz(c, n);
}

int slepian_index(const SlepianSetup& s) {
  const double arg = s.s2 * (s.t2 - s.t1) * s.c / (2.0 * kPi) + s.b * std::log(s.c) / (kPi * kPi);
  if (!(arg > 0.0)) throw DomainError("slepian_index: argument must be positive");
  return snap_floor(arg);
}

std::string to_string(SlepianIndexing indexing) {
  return indexing == SlepianIndexing::kDescendingZeroBased ? "descending, zero-based"
                                                           : "descending, one-based";
}

SlepianReport slepian_limit_check(const SlepianSetup& base, const std::vector<int>& sizes) {
  const double target = 1.0 / (1.0 + std::exp(base.b));
  std::vector<SlepianRow> zero, one;
  for (int size : sizes) {
    const auto setup = base.with_size(size);
    const int k = slepian_index(setup);
    const auto spec = hermitian_eigenvalues(slepian_matrix(setup));
    const int n = spec.n;
    if (k < 1 || k >= n) throw DomainError("slepian_limit_check: index outside the spectrum");
    // Descending order: the m-th largest eigenvalue is eigenvalues[n - m].
    const double l0 = spec.eigenvalues[n - 1 - k];
    const double l1 = spec.eigenvalues[n - k];
    zero.push_back({setup.c, n, k, l0, target, std::abs(l0 - target), l1, std::abs(l1 - target)});
    one.push_back({setup.c, n, k, l1, target, std::abs(l1 - target), l0, std::abs(l0 - target)});
  }
  auto monotone = [](const std::vector<SlepianRow>& rows) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
    return true;
  };
  const bool m0 = monotone(zero), m1 = monotone(one);
  bool pick_zero;
  if (m0 != m1) {
    pick_zero = m0;
  } else {
    pick_zero = zero.empty() || zero.back().deviation <= one.back().deviation;
  }
  SlepianReport rep;
  rep.indexing = pick_zero ? SlepianIndexing::kDescendingZeroBased
                           : SlepianIndexing::kDescendingOneBased;
  rep.rows = pick_zero ? zero : one;
  rep.monotone = pick_zero ? m0 : m1;
  return rep;
}

}  // namespace tspec
