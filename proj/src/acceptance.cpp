#include "tspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

#include "tspec/bulk_asymptotics.hpp"
#include "tspec/fh_determinants.hpp"
#include "tspec/gap_asymptotics.hpp"
#include "tspec/oracle.hpp"
#include "tspec/report_io.hpp"
#include "tspec/slepian.hpp"
#include "tspec/symbols.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      passed = false;
      detail += " [x]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<SmoothUnimodalSymbol> corpus_smooth() {
  return {SmoothUnimodalSymbol::tridiag3(), SmoothUnimodalSymbol::expcos()};
}

// 1 ---------------------------------------------------------------------------
Outcome tridiagonal_anchor() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sym = SmoothUnimodalSymbol::tridiag3();
  for (int n : {64, 256}) {
    const auto pred = predict_bulk_spectrum(sym, n);
    const auto exact = tridiag_closed_form(n, 3.0, -1.0);
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
      err = std::max(err, std::abs(pred.entries[j].lam_hat - exact.eigenvalues[j]));
    }
    o.check(err <= 1e-8, fmt("n=%d max error %.2e", n, err));
  }
  const double t = seconds_since(t0);
  o.check(t < 5.0, fmt("%.2f s", t));
  return o;
}

// 2 ---------------------------------------------------------------------------
Outcome bulk_convergence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sym = SmoothUnimodalSymbol::expcos();
  const double width = sym.max_value() - sym.min_value();
  std::map<int, double> max_err;
  double bulk_err = 0.0;
  for (int n : {64, 256}) {
    const auto pred = predict_bulk_spectrum(sym, n);
    const auto exact = exact_spectrum(sym, n);
    double err = 0.0, bulk = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double e = std::abs(pred.entries[j - 1].lam_hat - exact.eigenvalues[j - 1]);
      err = std::max(err, e);
      const double x = double(j) / n;
      if (x >= 0.2 && x <= 0.8) bulk = std::max(bulk, e);
    }
    max_err[n] = err;
    if (n == 256) bulk_err = bulk;
  }
  std::string note;
  if (std::max(max_err[64], max_err[256]) < 1e-10) note = " (both at rounding level)";
  o.check(max_err[256] < max_err[64],
          fmt("max error n=64 %.3e, n=256 %.3e%s", max_err[64], max_err[256], note.c_str()));
  o.check(bulk_err <= 1e-3 * width, fmt("bulk window error n=256 %.3e <= %.3e", bulk_err,
                                        1e-3 * width));
  const double t = seconds_since(t0);
  o.check(t < 120.0, fmt("%.1f s", t));
  return o;
}

// 3 ---------------------------------------------------------------------------
Outcome corollary_spacing() {
  Outcome o;
  for (const auto& sym : corpus_smooth()) {
    double lo_all = INFINITY, hi_all = 0.0, max_lo = 0.0, min_hi = INFINITY;
    for (int n : {64, 128, 256}) {
      const auto ev = exact_spectrum(sym, n).eigenvalues;
      double lo = INFINITY, hi = 0.0;
      for (int j = 1; j < n; ++j) {
        const double x0 = double(j) / n, x1 = double(j + 1) / n;
        if (x0 < 0.2 || x1 > 0.8) continue;
        const double s = n * (ev[j] - ev[j - 1]);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      lo_all = std::min(lo_all, lo);
      hi_all = std::max(hi_all, hi);
      max_lo = std::max(max_lo, lo);
      min_hi = std::min(min_hi, hi);
    }
    o.check(hi_all / lo_all <= 10.0 && max_lo <= min_hi,
            fmt("%s band [%.3f, %.3f] ratio %.2f, common part [%.3f, %.3f]", sym.name().c_str(),
                lo_all, hi_all, hi_all / lo_all, max_lo, min_hi));
  }
  return o;
}

// 4 ---------------------------------------------------------------------------
Outcome corollary_edge() {
  Outcome o;
  for (const auto& sym : corpus_smooth()) {
    std::map<int, double> gap;
    for (int n : {64, 128, 256}) gap[n] = exact_spectrum(sym, n).eigenvalues[0] - sym.min_value();
    for (int n : {64, 128}) {
      const double ratio = gap[n] / gap[2 * n];
      o.check(ratio >= 3.2 && ratio <= 4.8,
              fmt("%s (lambda_1 - L) ratio n=%d/%d: %.3f", sym.name().c_str(), n, 2 * n, ratio));
    }
  }
  return o;
}

// 5 ---------------------------------------------------------------------------
Outcome gap_spacing() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sym = TwoLevelSymbol::p1q4();
  const double eps = 0.1;
  const auto iv = gap_interval(sym, eps);
  struct PerN {
    int n;
    double lo, hi, max_empty;
  };
  std::vector<PerN> rows;
  for (int n : {128, 256, 512, 1024}) {
    const auto spec = two_level_spectrum(sym, n);
    const auto& ev = spec.eigenvalues;
    std::vector<double> inside;
    for (double x : ev)
      if (x > iv.lo && x < iv.hi) inside.push_back(x);
    PerN r{n, INFINITY, 0.0, 0.0};
    for (std::size_t i = 1; i < inside.size(); ++i) {
      const double s = (inside[i] - inside[i - 1]) * std::log(double(n));
      r.lo = std::min(r.lo, s);
      r.hi = std::max(r.hi, s);
    }
    // Longest subinterval of I_ε free of eigenvalues.
    double prev = iv.lo;
    for (double x : inside) {
      r.max_empty = std::max(r.max_empty, x - prev);
      prev = x;
    }
    r.max_empty = std::max(r.max_empty, iv.hi - prev);
    rows.push_back(r);
  }
  double lo_all = INFINITY, hi_all = 0.0, max_lo = 0.0, min_hi = INFINITY;
  std::string bands;
  for (const auto& r : rows) {
    lo_all = std::min(lo_all, r.lo);
    hi_all = std::max(hi_all, r.hi);
    max_lo = std::max(max_lo, r.lo);
    min_hi = std::min(min_hi, r.hi);
    bands += fmt(" n=%d [%.3f, %.3f]", r.n, r.lo, r.hi);
  }
  o.check(max_lo <= min_hi && hi_all / lo_all <= 10.0,
          fmt("spacing*ln n bands%s", bands.c_str()));
  for (const auto& r : rows) {
    const double len = hi_all / std::log(double(r.n));
    o.check(r.max_empty <= len,
            fmt("n=%d longest empty subinterval %.4f vs %.4f", r.n, r.max_empty, len));
  }
  const double t = seconds_since(t0);
  o.check(t < 600.0, fmt("%.1f s", t));
  return o;
}

// 6 ---------------------------------------------------------------------------
Outcome near_periodicity() {
  Outcome o;
  const auto sym = TwoLevelSymbol::p1q4();
  const int q = near_period(sym);
  const int p = sym.rational_arc()->p;
  const double eps = 0.1;
  std::vector<double> scaled, control;
  std::string detail, control_detail;
  for (int n : {128, 256, 512}) {
    const auto spec_n = exact_gap_spectrum(sym, two_level_spectrum(sym, n), eps);
    const auto spec_nq = exact_gap_spectrum(sym, two_level_spectrum(sym, n + q), eps / 2.0);
    const auto spec_wrong =
        exact_gap_spectrum(sym, two_level_spectrum(sym, n + q - 1), eps / 2.0);
    const auto m = match_near_periodic(spec_n, spec_nq, q, p);
    const auto w = match_near_periodic(spec_n, spec_wrong, q - 1, p);
    if (m.pairs.empty() || !m.unmatched.empty()) {
      o.check(false, fmt("n=%d: %zu pairs, %zu unmatched", n, m.pairs.size(), m.unmatched.size()));
    }
    scaled.push_back(m.max_scaled_distance);
    control.push_back(w.min_scaled_nearest);
    detail += fmt(" n=%d %.3g", n, m.max_scaled_distance);
    control_detail += fmt(" n=%d %.3g", n, w.min_scaled_nearest);
  }
  // "Does not grow": no later value exceeds the first by more than 25%.
  const double bound = 1.25 * scaled.front();
  const bool bounded = std::all_of(scaled.begin(), scaled.end(), [&](double s) { return s <= bound; });
  const bool control_grows = std::is_sorted(control.begin(), control.end()) &&
                             control.front() < control.back() &&
                             control.back() > 10.0 * *std::max_element(scaled.begin(), scaled.end());
  o.check(bounded, fmt("max dist*n ln n with shift q=%d:%s", q, detail.c_str()));
  o.check(control_grows, fmt("shift %d min nearest*n ln n:%s", q - 1, control_detail.c_str()));
  return o;
}

// 7 ---------------------------------------------------------------------------
Outcome determinant_asymptotics() {
  Outcome o;
  // Szegő: no singularities. slowdecay has Σ k V_k V_{-k} = 1/4 and V_0 = 0.
  const auto slow = SmoothUnimodalSymbol::slowdecay();
  std::map<int, double> err;
  for (int n : {16, 64}) {
    const auto d = toeplitz_determinant(slow.toeplitz_coeffs(n - 1), n);
    err[n] = std::abs(d.log_abs - 0.25);
  }
  o.check(err[64] < err[16] && err[64] <= 1e-3,
          fmt("Szego |log D_n - 1/4|: n=16 %.3e, n=64 %.3e", err[16], err[64]));

  const auto sym = TwoLevelSymbol::p1q4();
  const double lam = 0.5 * (1.0 + sym.high());
  const auto desc = shift_two_level(sym, lam);
  const double norm = beta_seminorm(desc);
  std::vector<double> ns, errs;
  for (int n : {32, 64, 128, 256}) {
    const auto fm = shift_coeffs(sym.toeplitz_coeffs(n + 1), lam);
    const auto f = raise_beta_coeffs(fm, sym.theta2());
    const auto exact = toeplitz_determinant(f, n);
    const auto asym = asymptotic_log_det(desc, n);
    ns.push_back(n);
    errs.push_back(std::abs(std::exp(exact.log() - asym.log()) - 1.0));
  }
  const double slope = loglog_slope(ns, errs);
  o.check(slope <= norm - 1.0 + 0.3,
          fmt("two-level |D/D_asym - 1| %.2e..%.2e, slope %.2f <= %.2f", errs.front(),
              errs.back(), slope, norm - 0.7));
  return o;
}

// 8 ---------------------------------------------------------------------------
std::vector<double> phi_hat_errors_smooth(const SmoothUnimodalSymbol& sym) {
  const double lam = 0.5 * (sym.min_value() + sym.max_value());
  const auto desc = shift_smooth(sym, lam);
  const double theta2 = desc.singularities[2].theta;
  std::vector<double> out;
  for (int n : {24, 48, 96}) {
    const auto fm = shift_coeffs(sym.toeplitz_coeffs(n + 1), lam);
    const auto f = raise_beta_coeffs(fm, theta2);
    out.push_back(std::abs(phi_hat_zero_exact(f, fm, theta2, n) -
                           asymptotic_phi_hat_zero(desc, n)));
  }
  return out;
}

Outcome phi_hat_consistency() {
  Outcome o;
  auto decreasing = [](const std::vector<double>& e) { return e[0] > e[1] && e[1] > e[2]; };

  const auto e1 = phi_hat_errors_smooth(SmoothUnimodalSymbol::slowdecay());
  o.check(decreasing(e1), fmt("smooth (slowdecay) n=24,48,96: %.2e %.2e %.2e", e1[0], e1[1], e1[2]));

  const auto sym = TwoLevelSymbol::p1q4();
  const double lam = 0.5 * (1.0 + sym.high());
  const auto desc = shift_two_level(sym, lam);
  std::vector<double> e2;
  for (int n : {24, 48, 96}) {
    const auto fm = shift_coeffs(sym.toeplitz_coeffs(n + 1), lam);
    const auto f = raise_beta_coeffs(fm, sym.theta2());
    e2.push_back(std::abs(phi_hat_zero_exact(f, fm, sym.theta2(), n) -
                          asymptotic_phi_hat_zero(desc, n)));
  }
  o.check(decreasing(e2), fmt("two-level n=24,48,96: %.2e %.2e %.2e", e2[0], e2[1], e2[2]));

  // Corpus smooth symbols: the error is already at rounding level; shown, not judged.
  for (const auto& s : corpus_smooth()) {
    const auto e = phi_hat_errors_smooth(s);
    const double worst = *std::max_element(e.begin(), e.end());
    o.check(worst < 1e-10, fmt("%s max error %.1e (rounding level)", s.name().c_str(), worst));
  }
  return o;
}

// 9 ---------------------------------------------------------------------------
Outcome slepian_limit() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  SlepianSetup setup;
  const auto rep = slepian_limit_check(setup, {256, 1024, 4096});
  std::string devs;
  for (const auto& r : rep.rows) devs += fmt(" n=%d %.4f", r.n, r.deviation);
  o.check(rep.monotone, fmt("|lambda_k - 1/2| (%s):%s", to_string(rep.indexing).c_str(),
                            devs.c_str()));
  o.check(rep.rows.back().deviation <= 0.15, fmt("final %.4f <= 0.15", rep.rows.back().deviation));
  const double t = seconds_since(t0);
  o.check(t < 900.0, fmt("%.1f s", t));
  return o;
}

// 10 --------------------------------------------------------------------------
Outcome invariant_suites() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto smooth = corpus_smooth();
  const auto two = TwoLevelSymbol::p1q4();

  // Interlacing and open-interval containment.
  bool interlace = true, contained = true;
  auto check_pair = [&](const ExactSpectrum& a, const ExactSpectrum& b, double lo, double hi) {
    for (int i = 0; i < a.n; ++i) {
      if (b.eigenvalues[i] > a.eigenvalues[i] + 1e-12 ||
          a.eigenvalues[i] > b.eigenvalues[i + 1] + 1e-12) {
        interlace = false;
      }
    }
    // Eigenvalues cluster exponentially close to the levels of a jump symbol, so the
    // strict bounds are checked up to the eigensolver's rounding.
    const double slack = 1e-12 * std::max(std::abs(lo), std::abs(hi));
    for (const auto* s : {&a, &b})
      for (double x : s->eigenvalues)
        if (!(x > lo - slack && x < hi + slack)) contained = false;
  };
  for (const auto& sym : smooth) {
    check_pair(exact_spectrum(sym, 32), exact_spectrum(sym, 33), sym.min_value(), sym.max_value());
  }
  check_pair(two_level_spectrum(two, 32), two_level_spectrum(two, 33), 1.0, two.high());
  o.check(interlace, "interlacing n=32/33");
  o.check(contained, "spectra inside (ess inf, ess sup)");

  // Ψ and G monotone on a 200-point grid.
  bool psi_mono = true, g_mono = true;
  for (const auto& sym : smooth) {
    const double lo = sym.min_value(), hi = sym.max_value();
    std::vector<PhaseFunctions> pf;
    for (int i = 0; i < 200; ++i) pf.push_back(phase_functions(sym, lo + (hi - lo) * (i + 0.5) / 200));
    for (std::size_t i = 1; i < pf.size(); ++i) {
      if (!(pf[i].psi > pf[i - 1].psi)) psi_mono = false;
      for (int n : {16, 64, 256}) {
        if (!((n + 1) * pf[i].psi + pf[i].theta > (n + 1) * pf[i - 1].psi + pf[i - 1].theta)) {
          g_mono = false;
        }
      }
    }
  }
  o.check(psi_mono, "Psi increasing");
  o.check(g_mono, "G increasing for n=16,64,256");

  // Wiener-Hopf reconstruction and conjugate symmetry.
  double wh_err = 0.0;
  for (const auto& sym : {SmoothUnimodalSymbol::expcos(), SmoothUnimodalSymbol::slowdecay()}) {
    const auto& v = sym.log_coeffs();
    for (int l = 0; l < 128; ++l) {
      const double t = 2.0 * kPi * l / 128;
      const auto wh = wiener_hopf_eval(v, std::polar(1.0, t));
      const Complex rebuilt = wh.b_plus * std::exp(v[0]) * wh.b_minus;
      const double ref = sym.value(t);
      wh_err = std::max(wh_err, std::abs(rebuilt - ref) / ref);
      wh_err = std::max(wh_err, std::abs(wh.b_minus - std::conj(wh.b_plus)) / std::abs(wh.b_plus));
    }
  }
  o.check(wh_err <= 1e-10, fmt("Wiener-Hopf rebuild %.1e", wh_err));

  // Θ from V(·;λ) against the ln|f - λ| form and the ln f product form.
  std::mt19937_64 rng(20240601);
  double theta_err = 0.0, psi_err = 0.0;
  for (const auto& sym : {SmoothUnimodalSymbol::expcos(), SmoothUnimodalSymbol::slowdecay()}) {
    std::uniform_real_distribution<double> dist(sym.min_value(), sym.max_value());
    for (int i = 0; i < 10; ++i) {
      const double lam = dist(rng);
      const double th = theta(sym, lam);
      theta_err = std::max(theta_err, std::abs(th - theta_from_log_abs(sym, lam)));
      theta_err = std::max(theta_err, std::abs(th - theta_from_log_product(sym, lam)));
      psi_err = std::max(psi_err, std::abs(psi(sym, lam) - psi_quadrature(sym, lam)));
    }
  }
  o.check(theta_err <= 1e-8, fmt("dual Theta forms %.1e", theta_err));
  o.check(psi_err <= 1e-8, fmt("Psi quadrature %.1e", psi_err));
  const double t = seconds_since(t0);
  o.check(t < 300.0, fmt("%.1f s", t));
  return o;
}

struct Entry {
  const char* title;
  Outcome (*fn)();
};

const Entry kCriteria[kCriterionCount] = {
    {"tridiagonal anchor", tridiagonal_anchor},
    {"bulk convergence", bulk_convergence},
    {"bulk spacing band", corollary_spacing},
    {"edge scaling", corollary_edge},
    {"gap spacing", gap_spacing},
    {"near-periodicity", near_periodicity},
    {"determinant asymptotics", determinant_asymptotics},
    {"Phi_n(0) consistency", phi_hat_consistency},
    {"Slepian limit", slepian_limit},
    {"invariant suites", invariant_suites},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no such criterion");
  const auto& e = kCriteria[id - 1];
  CriterionResult r{id, e.title, false, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto out = e.fn();
    r.passed = out.passed;
    r.detail = out.detail;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(
    const std::set<int>& only, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!only.empty() && !only.count(id)) continue;
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return fmt("%s [%d] %s: ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str()) + r.detail +
         fmt(" (%.1f s)", r.seconds);
}

}  // namespace tspec
