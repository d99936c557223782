#include "tspec/gap_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tspec/errors.hpp"
#include "tspec/special_fns.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisection = 200;

double chord(const TwoLevelSymbol& sym) {
  return std::abs(std::polar(1.0, sym.theta1()) - std::polar(1.0, sym.theta2()));
}

}  // namespace

double H_n(const TwoLevelSymbol& sym, double lam, int n) {
  const double g = gamma_lambda(sym.gamma(), lam);
  return 2.0 * g * std::log(n * chord(sym)) - 2.0 * arg_gamma_half(g);
}

double gap_phase(const TwoLevelSymbol& sym, double lam, int n) {
  return sym.arc_length() * n / (2.0 * kPi) + H_n(sym, lam, n) / kPi;
}

GapInterval gap_interval(const TwoLevelSymbol& sym, double eps) {
  const double high = sym.high();
  if (!(eps > 0.0 && eps < (high - 1.0) / 2.0)) {
    throw PreconditionError("gap interval: need 0 < eps < (e^{2 pi gamma} - 1)/2");
  }
  return {1.0 + eps, high - eps};
}

GapSpectrum predict_gap_spectrum(const TwoLevelSymbol& sym, int n, double eps) {
  const auto iv = gap_interval(sym, eps);
  GapSpectrum out{n, eps, {}};
  const double p_hi = gap_phase(sym, iv.lo, n);
  const double p_lo = gap_phase(sym, iv.hi, n);
  if (!(p_hi > p_lo)) return out;
  const int k_min = int(std::floor(p_lo - 0.5)) + 1;
  const int k_max = int(std::ceil(p_hi - 0.5)) - 1;
  for (int k = k_min; k <= k_max; ++k) {
    const double target = k + 0.5;
    double a = iv.lo, b = iv.hi;  // phase(a) > target > phase(b)
    GapEigenvalue e{k, 0.5 * (a + b), INFINITY};
    for (int it = 0; it < kMaxBisection; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double r = gap_phase(sym, mid, n) - target;
      e.lam = mid;
      e.phase_residual = r;
      (r > 0.0 ? a : b) = mid;
    }
    out.entries.push_back(e);
  }
  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    if (!(out.entries[i].lam < out.entries[i - 1].lam)) {
      throw InternalConsistencyError("predict_gap_spectrum: phase is not monotone in lambda");
    }
  }
  return out;
}

ExactSpectrum two_level_spectrum(const TwoLevelSymbol& sym, int n) {
  // Rotating the arc to be centred on π makes the symbol even and T_n real symmetric.
  const double shift = 0.5 * (sym.theta1() + sym.theta2()) - kPi;
  auto c = rotate_coeffs(sym.toeplitz_coeffs(n - 1), shift);
  for (int k = -(n - 1); k <= n - 1; ++k) c.at(k) = c[k].real();
  return hermitian_eigenvalues(build_toeplitz(c, n));
}

GapSpectrum exact_gap_spectrum(const TwoLevelSymbol& sym, const ExactSpectrum& spec,
                               double eps) {
  const auto iv = gap_interval(sym, eps);
  GapSpectrum out{spec.n, eps, {}};
  for (auto it = spec.eigenvalues.rbegin(); it != spec.eigenvalues.rend(); ++it) {
    const double lam = *it;
    if (!(lam > iv.lo && lam < iv.hi)) continue;
    const double ph = gap_phase(sym, lam, spec.n);
    const int k = int(std::lround(ph - 0.5));
    out.entries.push_back({k, lam, ph - (k + 0.5)});
  }
  return out;
}

PeriodicityMatch match_near_periodic(const GapSpectrum& spec_n, const GapSpectrum& spec_nq,
                                     int q, int p) {
  PeriodicityMatch m;
  m.n = spec_n.n;
  m.q = q;
  m.p = p;
  const double scale = spec_n.n * std::log(double(spec_n.n));
  m.min_scaled_nearest = INFINITY;
  for (const auto& e : spec_n.entries) {
    auto partner = std::find_if(spec_nq.entries.begin(), spec_nq.entries.end(),
                                [&](const GapEigenvalue& x) { return x.k == e.k + p; });
    if (partner == spec_nq.entries.end()) {
      m.unmatched.push_back(e.k);
      continue;
    }
    double nearest = INFINITY;
    for (const auto& x : spec_nq.entries) nearest = std::min(nearest, std::abs(x.lam - e.lam));
    PeriodicPair pr{e.k, e.lam, partner->lam, std::abs(partner->lam - e.lam), nearest};
    m.max_scaled_distance = std::max(m.max_scaled_distance, pr.distance * scale);
    m.min_scaled_nearest = std::min(m.min_scaled_nearest, pr.nearest_distance * scale);
    m.pairs.push_back(pr);
  }
  if (m.pairs.empty()) m.min_scaled_nearest = 0.0;
  return m;
}

}  // namespace tspec
