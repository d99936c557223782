#include "tspec/bulk_asymptotics.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "tspec/errors.hpp"
#include "tspec/parallel.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxBisection = 200;
constexpr double kLambdaTol = 4.0 * std::numeric_limits<double>::epsilon();
constexpr double kPhaseTol = 1e-10;

void require_bulk(const SmoothUnimodalSymbol& sym, double lam) {
  if (!(lam > sym.min_value() && lam < sym.max_value())) {
    throw DomainError("lambda outside (L, M)");
  }
}

double psi_from_roots(const RootAngles& r) { return 0.5 * (r.theta1 - r.theta2) + kPi; }

double bulk_phase(const SmoothUnimodalSymbol& sym, double lam, int n) {
  auto pf = phase_functions(sym, lam);
  return (n + 1) * pf.psi + pf.theta;
}

// Bracketing solve of G(λ) = jπ on (a, b). TOMS 748 keeps the root bracketed like
// bisection but needs far fewer phase evaluations; plain halving finishes the job if
// the phase residual is still above tolerance.
PredictedEigenvalue solve_phase(const SmoothUnimodalSymbol& sym, int n, int j, double a,
                                double b) {
  const double target = j * kPi;
  const double lo = sym.min_value(), hi = sym.max_value();
  auto g = [&](double x) {
    if (x <= lo) return -target;
    if (x >= hi) return (n + 1) * kPi - target;
    return bulk_phase(sym, x, n) - target;
  };
  double fa = g(a), fb = g(b);
  if (!(fa < 0.0 && fb > 0.0)) {
    throw InternalConsistencyError("predict_bulk_spectrum: phase does not bracket j pi");
  }
  std::uintmax_t iters = kMaxBisection;
  auto tol = [](double x, double y) {
    return std::abs(y - x) <= kLambdaTol * std::max(1.0, std::abs(x));
  };
  auto [ra, rb] = boost::math::tools::toms748_solve(g, a, b, fa, fb, tol, iters);
  PredictedEigenvalue out{j, 0.5 * (ra + rb), 0.0};
  out.phase_residual = g(out.lam_hat);
  for (int it = 0; it < kMaxBisection && std::abs(out.phase_residual) > kPhaseTol; ++it) {
    (out.phase_residual < 0.0 ? ra : rb) = out.lam_hat;
    const double mid = 0.5 * (ra + rb);
    if (mid <= ra || mid >= rb) break;
    out.lam_hat = mid;
    out.phase_residual = g(mid);
  }
  return out;
}

bool strictly_increasing(const SpectrumPrediction& p) {
  for (std::size_t i = 1; i < p.entries.size(); ++i) {
    if (!(p.entries[i].lam_hat > p.entries[i - 1].lam_hat)) return false;
  }
  return true;
}

}  // namespace

PhaseFunctions phase_functions(const SmoothUnimodalSymbol& sym, double lam) {
  require_bulk(sym, lam);
  const auto shift = shift_smooth_log_r(sym, lam);
  const Complex z1 = std::polar(1.0, shift.roots.theta1);
  const Complex z2 = std::polar(1.0, shift.roots.theta2);
  PhaseFunctions pf;
  pf.lam = lam;
  pf.theta1 = shift.roots.theta1;
  pf.theta2 = shift.roots.theta2;
  pf.psi = psi_from_roots(shift.roots);
  pf.log_r_mean = shift.log_r[0].real();
  pf.truncation_tail = shift.log_r_tail;
  Complex p1 = 1.0, p2 = 1.0;
  for (int k = 1; k <= shift.log_r.order(); ++k) {
    p1 *= z1;
    p2 *= z2;
    const Complex r = shift.log_r[k];
    pf.theta += (r * (p1 - p2)).imag();
    pf.z_shift -= (r * (p1 + p2)).real();
    pf.weighted_square += k * std::norm(r);
  }
  return pf;
}

double psi(const SmoothUnimodalSymbol& sym, double lam) {
  require_bulk(sym, lam);
  return psi_from_roots(root_angles(sym, lam));
}

double psi_quadrature(const SmoothUnimodalSymbol& sym, double lam, std::size_t grid_size) {
  require_bulk(sym, lam);
  // Im ln(f - λ) is π where f < λ and 0 where f > λ.
  const double h = kTwoPi / double(grid_size);
  double below = 0.0;
  double f0 = sym.value(0.0) - lam;
  for (std::size_t l = 0; l < grid_size; ++l) {
    double a = l * h;
    double b = (l + 1 == grid_size) ? kTwoPi : (l + 1) * h;
    double fb = sym.value(b) - lam;
    if ((f0 < 0.0) == (fb < 0.0)) {
      if (f0 < 0.0) below += b - a;
    } else {
      const bool rising = f0 < 0.0;
      double lo = a, hi = b;
      for (int it = 0; it < kMaxBisection; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        bool neg = sym.value(mid) - lam < 0.0;
        ((neg == rising) ? lo : hi) = mid;
      }
      double root = 0.5 * (lo + hi);
      below += rising ? root - a : b - root;
    }
    f0 = fb;
  }
  return kPi * below / kTwoPi;
}

double theta(const SmoothUnimodalSymbol& sym, double lam) { return phase_functions(sym, lam).theta; }

double z_shift(const SmoothUnimodalSymbol& sym, double lam) {
  return phase_functions(sym, lam).z_shift;
}

double theta_from_log_abs(const SmoothUnimodalSymbol& sym, double lam, std::size_t grid_size) {
  require_bulk(sym, lam);
  const auto roots = root_angles(sym, lam);
  const Complex z1 = std::polar(1.0, roots.theta1);
  const Complex z2 = std::polar(1.0, roots.theta2);

  // g = ln|f - λ| - ln|z - z_1| - ln|z - z_2| is smooth; bridge the roots linearly.
  auto g = [&](double t) {
    const Complex z = std::polar(1.0, t);
    return std::log(std::abs(sym.value(t) - lam)) - std::log(std::abs(z - z1)) -
           std::log(std::abs(z - z2));
  };
  const double h = 1e-5;
  const double arc = roots.theta2 - roots.theta1;
  const double step = std::min(h, 0.25 * std::min(arc, kTwoPi - arc));
  CircleGrid grid;
  grid.samples.resize(grid_size);
  for (std::size_t l = 0; l < grid_size; ++l) {
    const double t = CircleGrid::angle(l, grid_size);
    double val;
    const double d1 = std::remainder(t - roots.theta1, kTwoPi);
    const double d2 = std::remainder(t - roots.theta2, kTwoPi);
    if (std::abs(d1) < step || std::abs(d2) < step) {
      const double root = std::abs(d1) < step ? roots.theta1 : roots.theta2;
      const double d = std::abs(d1) < step ? d1 : d2;
      const double gm = g(root - step), gp = g(root + step);
      val = gm + (gp - gm) * (d + step) / (2.0 * step);
    } else {
      val = g(t);
    }
    grid.samples[l] = val;
  }
  const int order = int(grid_size / 4);
  const auto c = fourier_coeffs(grid, order);

  // Smooth part summed numerically; the singular part Σ (z_1^k - z_2^k)(ln|z-z_1||z-z_2|)_k
  // has imaginary part arg(1 - z_1/z_2).
  double smooth = 0.0;
  Complex p1 = 1.0, p2 = 1.0;
  for (int k = 1; k <= order; ++k) {
    p1 *= z1;
    p2 *= z2;
    smooth += ((p1 - p2) * c[k]).imag();
  }
  const double singular = std::arg(1.0 - z1 / z2);
  return smooth + singular - psi_from_roots(roots) + kPi / 2.0;
}

double theta_from_log_product(const SmoothUnimodalSymbol& sym, double lam) {
  require_bulk(sym, lam);
  const auto shift = shift_smooth_log_r(sym, lam);
  const Complex z1 = std::polar(1.0, shift.roots.theta1);
  const Complex z2 = std::polar(1.0, shift.roots.theta2);
  // (ln f)_k = r_k - z_1^{-k}/k and (ln f)_{-k} = r_{-k} - z_2^k/k for k >= 1; the
  // product of the two singular parts sums to -ln(1 - z_2/z_1).
  Complex sum = -std::log(1.0 - z2 / z1);
  Complex p1 = 1.0, p2 = 1.0;
  for (int k = 1; k <= shift.log_r.order(); ++k) {
    p1 *= z1;
    p2 *= z2;
    const Complex rp = shift.log_r[k];
    const Complex rm = shift.log_r[-k];
    sum += double(k) * rp * rm - rp * p2 - rm / p1;
  }
  return sum.imag() - psi_from_roots(shift.roots) + kPi / 2.0;
}

SpectrumPrediction predict_bulk_spectrum(const SmoothUnimodalSymbol& sym, int n) {
  if (n < 4) throw PreconditionError("predict_bulk_spectrum: n must be at least 4");
  const double lo = sym.min_value();
  const double hi = sym.max_value();
  SpectrumPrediction out{n, std::vector<PredictedEigenvalue>(std::size_t(n))};
  parallel_for(std::size_t(n), [&](std::size_t i) {
    out.entries[i] = solve_phase(sym, n, int(i) + 1, lo, hi);
  });
  if (strictly_increasing(out)) return out;

  // Fallback: bracket every root from a dense scan of G, clustered at the edges.
  const int samples = 50 * n;
  std::vector<double> lam(samples), phase(samples);
  parallel_for(std::size_t(samples), [&](std::size_t s) {
    const double t = (s + 0.5) / samples;
    lam[s] = lo + (hi - lo) * 0.5 * (1.0 - std::cos(kPi * t));
    phase[s] = bulk_phase(sym, lam[s], n);
  });
  for (int s = 1; s < samples; ++s) {
    if (!(phase[s] > phase[s - 1])) {
      throw InternalConsistencyError("predict_bulk_spectrum: phase is not monotone in lambda");
    }
  }
  parallel_for(std::size_t(n), [&](std::size_t i) {
    const double target = (int(i) + 1) * kPi;
    auto it = std::lower_bound(phase.begin(), phase.end(), target);
    const std::size_t s = std::size_t(it - phase.begin());
    const double a = s == 0 ? lo : lam[s - 1];
    const double b = s == phase.size() ? hi : lam[s];
    out.entries[i] = solve_phase(sym, n, int(i) + 1, a, b);
  });
  if (!strictly_increasing(out)) {
    throw InternalConsistencyError("predict_bulk_spectrum: predicted eigenvalues not increasing");
  }
  return out;
}

double e_n_value(const SmoothUnimodalSymbol& sym, double lam, int n) {
  if (n > 512) throw PreconditionError("e_n_residual: n must be at most 512");
  const auto pf = phase_functions(sym, lam);
  const auto d = toeplitz_determinant(shift_coeffs(sym.toeplitz_coeffs(n - 1), lam), n);
  if (d.singular) return 0.0;
  const double chord = std::abs(std::polar(1.0, pf.theta1) - std::polar(1.0, pf.theta2));
  const double log_scale = d.log_abs + std::log(chord) - pf.z_shift - n * pf.log_r_mean -
                           pf.weighted_square;
  return std::cos(d.phase) * std::exp(log_scale) / 2.0;
}

double e_n_residual(const SmoothUnimodalSymbol& sym, double lam, int n) {
  const auto pf = phase_functions(sym, lam);
  return e_n_value(sym, lam, n) - std::sin((n + 1) * pf.psi + pf.theta);
}

namespace {

template <class Fn>
double edge_scaled_derivative(const SmoothUnimodalSymbol& sym, double lam, double rel_step,
                              Fn&& fn) {
  require_bulk(sym, lam);
  const double lo = sym.min_value(), hi = sym.max_value();
  const double d = std::min(rel_step * (hi - lo), 0.5 * std::min(lam - lo, hi - lam));
  const double deriv = (fn(lam + d) - fn(lam - d)) / (2.0 * d);
  return deriv * std::sqrt((lam - lo) * (hi - lam));
}

}  // namespace

double a_coefficient(const SmoothUnimodalSymbol& sym, double lam) {
  return edge_scaled_derivative(sym, lam, 1e-6, [&](double x) { return psi(sym, x); });
}

double b_coefficient(const SmoothUnimodalSymbol& sym, double lam) {
  return edge_scaled_derivative(sym, lam, 1e-5, [&](double x) { return theta(sym, x); });
}

ExactSpectrum exact_spectrum(const SmoothUnimodalSymbol& sym, int n) {
  return hermitian_eigenvalues(build_toeplitz(sym.toeplitz_coeffs(n - 1), n));
}

CorollaryReport corollary_report(const SmoothUnimodalSymbol& sym, int n, double eps,
                                 const std::optional<ExactSpectrum>& exact) {
  const double lo = sym.min_value(), hi = sym.max_value();
  CorollaryReport rep;
  rep.n = n;
  rep.eps = eps;
  constexpr int kGrid = 200;
  std::vector<double> a(kGrid), b(kGrid);
  parallel_for(kGrid, [&](std::size_t i) {
    const double lam = lo + (hi - lo) * (i + 0.5) / kGrid;
    a[i] = a_coefficient(sym, lam);
    b[i] = b_coefficient(sym, lam);
  });
  rep.a_min = *std::min_element(a.begin(), a.end());
  rep.a_max = *std::max_element(a.begin(), a.end());
  rep.b_min = *std::min_element(b.begin(), b.end());
  rep.b_max = *std::max_element(b.begin(), b.end());
  if (!(eps > 0.0 && eps < rep.a_min / 2.0)) {
    throw PreconditionError("corollary_report: need 0 < eps < a_min/2");
  }

  const ExactSpectrum spec = exact ? *exact : exact_spectrum(sym, n);
  const auto& ev = spec.eigenvalues;
  rep.spacing_min = INFINITY;
  rep.spacing_max = 0.0;
  for (int j = 1; j < n; ++j) {
    const double x = double(j) / n;
    if (x > 2.0 * eps && x < 1.0 - 2.0 * eps) {
      const double s = n * (ev[j] - ev[j - 1]);
      rep.spacing_min = std::min(rep.spacing_min, s);
      rep.spacing_max = std::max(rep.spacing_max, s);
    }
  }
  for (int j = 1; double(j) / n <= 2.0 * eps; ++j) {
    rep.edge_ratios.push_back((ev[j - 1] - lo) / (hi - lo) * double(n) * n / (double(j) * j));
  }
  rep.edge_lower = 1.0 / (rep.a_max * rep.a_max);
  rep.edge_upper = kPi * kPi / (4.0 * rep.a_min * rep.a_min);
  return rep;
}

}  // namespace tspec
