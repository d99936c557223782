#include "tspec/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "tspec/errors.hpp"

namespace tspec {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxBisection = 200;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

// Σ_{k>=1} c_k z^k by Horner.
Complex positive_part(const FourierSeries& v, Complex z) {
  Complex acc{};
  for (int k = v.order(); k >= 1; --k) acc = (acc + v[k]) * z;
  return acc;
}

Complex positive_part_derivative(const FourierSeries& v, Complex z, int power) {
  Complex acc{};
  for (int k = v.order(); k >= 1; --k) acc = (acc + v[k] * std::pow(double(k), power)) * z;
  return acc;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// sin(θ_l/2), cos(θ_l/2) on the default grid.
struct HalfAngles {
  std::vector<double> s;
  std::vector<double> c;
};

const HalfAngles& default_half_angles() {
  static const HalfAngles table = [] {
    HalfAngles t;
    t.s.resize(kDefaultGridSize);
    t.c.resize(kDefaultGridSize);
    for (std::size_t l = 0; l < kDefaultGridSize; ++l) {
      double th = CircleGrid::angle(l, kDefaultGridSize) / 2.0;
      t.s[l] = std::sin(th);
      t.c[l] = std::cos(th);
    }
    return t;
  }();
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// SmoothUnimodalSymbol

SmoothUnimodalSymbol SmoothUnimodalSymbol::from_log_coeffs(FourierSeries log_coeffs,
                                                           std::string name) {
  const double scale = std::max(1.0, std::abs(log_coeffs[0]));
  if (log_coeffs.hermitian_defect() > 1e-12 * scale ||
      std::abs(log_coeffs[0].imag()) > 1e-12 * scale) {
    throw DomainError("smooth symbol: log-coefficients do not describe a real function");
  }
  SmoothUnimodalSymbol sym;
  sym.name_ = std::move(name);
  sym.log_coeffs_ = std::move(log_coeffs);
  sym.certify();
  return sym;
}

SmoothUnimodalSymbol SmoothUnimodalSymbol::from_log_function(
    const std::function<double(double)>& log_f, int order, std::string name) {
  auto grid = CircleGrid::sample([&](double t) { return Complex(log_f(t), 0.0); });
  auto coeffs = fourier_coeffs(grid, order);
  // The grid transform of a real function is Hermitian up to rounding; enforce it.
  FourierSeries v(order);
  v.at(0) = coeffs[0].real();
  double re_max = 0.0, im_max = 0.0;
  for (int k = 1; k <= order; ++k) {
    Complex c = 0.5 * (coeffs[k] + std::conj(coeffs[-k]));
    v.at(k) = c;
    v.at(-k) = std::conj(c);
    re_max = std::max(re_max, std::abs(c.real()));
    im_max = std::max(im_max, std::abs(c.imag()));
  }
  // An even log_f leaves only rounding noise in the imaginary parts.
  if (im_max < 1e-14 * std::max(re_max, 1e-300)) {
    for (int k = -order; k <= order; ++k) v.at(k) = v[k].real();
  }
  return from_log_coeffs(std::move(v), std::move(name));
}

SmoothUnimodalSymbol SmoothUnimodalSymbol::tridiag3() {
  return from_log_function([](double t) { return std::log(3.0 - 2.0 * std::cos(t)); },
                           kDefaultLogOrder, "tridiag3");
}

SmoothUnimodalSymbol SmoothUnimodalSymbol::expcos() {
  FourierSeries v(kDefaultLogOrder);
  v.at(1) = -0.5;
  v.at(-1) = -0.5;
  return from_log_coeffs(std::move(v), "expcos");
}

SmoothUnimodalSymbol SmoothUnimodalSymbol::slowdecay() {
  constexpr int kOrder = 512;
  constexpr double r = 0.9;
  const double c = 0.5 / std::sqrt(-std::log(1.0 - r * r));
  FourierSeries v(kOrder);
  double rk = 1.0;
  for (int k = 1; k <= kOrder; ++k) {
    rk *= -r;
    v.at(k) = c * rk / k;
    v.at(-k) = c * rk / k;
  }
  return from_log_coeffs(std::move(v), "slowdecay");
}

double SmoothUnimodalSymbol::log_value(double theta) const {
  Complex z = std::polar(1.0, theta);
  return log_coeffs_[0].real() + 2.0 * positive_part(log_coeffs_, z).real();
}

double SmoothUnimodalSymbol::value(double theta) const { return std::exp(log_value(theta)); }

double SmoothUnimodalSymbol::log_derivative(double theta) const {
  // d/dθ Σ V_k e^{ikθ} = Σ ik V_k e^{ikθ}; real part of twice the k>0 half.
  Complex z = std::polar(1.0, theta);
  return -2.0 * positive_part_derivative(log_coeffs_, z, 1).imag();
}

double SmoothUnimodalSymbol::second_derivative(double theta) const {
  Complex z = std::polar(1.0, theta);
  double v1 = -2.0 * positive_part_derivative(log_coeffs_, z, 1).imag();
  double v2 = -2.0 * positive_part_derivative(log_coeffs_, z, 2).real();
  return value(theta) * (v2 + v1 * v1);
}

void SmoothUnimodalSymbol::certify() {
  const int order = log_coeffs_.order();
  truncation_tail_ = log_coeffs_.tail_mass(order / 2);

  const std::size_t n = kDefaultGridSize;
  grid_values_.resize(n);
  for (std::size_t l = 0; l < n; ++l) grid_values_[l] = value(CircleGrid::angle(l, n));

  // First differences d_l = f_{l+1} - f_l with f_n = f_0: one rise then one fall.
  int changes = 0;
  std::size_t peak = 0;
  for (std::size_t l = 0; l + 1 < n; ++l) {
    double d0 = grid_values_[l + 1] - grid_values_[l];
    double d1 = grid_values_[(l + 2) % n] - grid_values_[l + 1];
    if (d0 == 0.0 || d1 == 0.0) {
      throw DomainError("smooth symbol: not strictly monotone on the certification grid");
    }
    if ((d0 > 0.0) != (d1 > 0.0)) {
      ++changes;
      peak = l + 1;
    }
  }
  if (grid_values_[1] <= grid_values_[0] || grid_values_[0] >= grid_values_[n - 1] ||
      changes != 1) {
    throw DomainError("smooth symbol: not unimodal with its minimum at theta = 0");
  }

  double slope_scale = 0.0;
  for (int k = 1; k <= order; ++k) slope_scale += k * std::abs(log_coeffs_[k]);
  if (std::abs(log_derivative(0.0)) > 1e-9 * std::max(1.0, slope_scale)) {
    throw DomainError("smooth symbol: minimum is not located at theta = 0");
  }

  double a = CircleGrid::angle(peak - 1, n);
  double b = CircleGrid::angle(peak + 1, n);
  for (int it = 0; it < kMaxBisection; ++it) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    (log_derivative(mid) > 0.0 ? a : b) = mid;
  }
  theta_max_ = 0.5 * (a + b);
  min_value_ = value(0.0);
  max_value_ = value(theta_max_);

  const double curvature_floor = 1e-8 * std::max(1.0, max_value_);
  if (std::abs(second_derivative(0.0)) < curvature_floor ||
      std::abs(second_derivative(theta_max_)) < curvature_floor) {
    throw DomainError("smooth symbol: degenerate extremum (vanishing second derivative)");
  }
}

FourierSeries SmoothUnimodalSymbol::toeplitz_coeffs(int max_index) const {
  if (max_index < 0) throw PreconditionError("toeplitz_coeffs: negative index range");
  std::size_t size = std::max(kDefaultGridSize, next_pow2(4 * std::size_t(max_index)));
  CircleGrid grid;
  grid.samples.resize(size);
  if (size == kDefaultGridSize) {
    for (std::size_t l = 0; l < size; ++l) grid.samples[l] = grid_values_[l];
  } else {
    for (std::size_t l = 0; l < size; ++l) grid.samples[l] = value(CircleGrid::angle(l, size));
  }
  auto c = fourier_coeffs(grid, max_index);
  // Real V_k means an even symbol, whose Toeplitz coefficients are real.
  const bool even = std::all_of(log_coeffs_.data().begin(), log_coeffs_.data().end(),
                                [](Complex z) { return z.imag() == 0.0; });
  FourierSeries out(max_index);
  out.at(0) = c[0].real();
  for (int k = 1; k <= max_index; ++k) {
    Complex ck = 0.5 * (c[k] + std::conj(c[-k]));
    if (even) ck = ck.real();
    out.at(k) = ck;
    out.at(-k) = std::conj(ck);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TwoLevelSymbol

TwoLevelSymbol::TwoLevelSymbol(double theta1, double theta2, double gamma,
                               std::optional<RationalArc> arc)
    : theta1_(theta1), theta2_(theta2), gamma_(gamma), arc_(arc) {
  if (!(theta1 > 0.0) || !(theta2 > theta1) || !(theta2 < kTwoPi)) {
    throw DomainError("two-level symbol: need 0 < theta1 < theta2 < 2 pi");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("two-level symbol: gamma must be positive");
  }
}

TwoLevelSymbol TwoLevelSymbol::from_angles(double theta1, double theta2, double gamma) {
  return TwoLevelSymbol(theta1, theta2, gamma, std::nullopt);
}

TwoLevelSymbol TwoLevelSymbol::from_rational_arc(double theta1, int p, int q, double gamma) {
  if (p <= 0 || q <= p || std::gcd(p, q) != 1) {
    throw DomainError("two-level symbol: need coprime 0 < p < q");
  }
  return TwoLevelSymbol(theta1, theta1 + kTwoPi * p / q, gamma, RationalArc{p, q});
}

TwoLevelSymbol TwoLevelSymbol::p1q4() {
  return from_rational_arc(std::numbers::pi / 2.0, 1, 4, std::numbers::ln2 / kTwoPi);
}

double TwoLevelSymbol::high() const { return std::exp(kTwoPi * gamma_); }

double TwoLevelSymbol::value(double theta) const {
  double t = wrap_angle(theta);
  return (t >= theta1_ && t < theta2_) ? high() : 1.0;
}

FourierSeries TwoLevelSymbol::toeplitz_coeffs(int max_index) const {
  if (max_index < 0) throw PreconditionError("toeplitz_coeffs: negative index range");
  const double jump = high() - 1.0;
  FourierSeries out(max_index);
  out.at(0) = 1.0 + jump * (theta2_ - theta1_) / kTwoPi;
  for (int k = 1; k <= max_index; ++k) {
    Complex ck = jump * (std::polar(1.0, -k * theta1_) - std::polar(1.0, -k * theta2_)) /
                 Complex(0.0, kTwoPi * k);
    out.at(k) = ck;
    out.at(-k) = std::conj(ck);
  }
  return out;
}

TwoLevelSymbol TwoLevelSymbol::complementary() const {
  const double arc = kTwoPi - arc_length();
  const double t1 = 0.5 * (kTwoPi - arc);
  std::optional<RationalArc> r;
  if (arc_) r = RationalArc{arc_->q - arc_->p, arc_->q};
  double t2 = r ? t1 + kTwoPi * r->p / r->q : t1 + arc;
  return TwoLevelSymbol(t1, t2, gamma_, r);
}

// ---------------------------------------------------------------------------
// FHDescriptor

void FHDescriptor::validate() const {
  if (singularities.empty() || singularities.front().theta != 0.0) {
    throw PreconditionError("FH descriptor: z_0 = 1 must be listed first");
  }
  for (std::size_t j = 0; j < singularities.size(); ++j) {
    const auto& s = singularities[j];
    if (!(s.alpha.real() > -0.5)) throw DomainError("FH descriptor: Re alpha <= -1/2");
    if (!std::isfinite(s.theta) || s.theta >= kTwoPi) {
      throw DomainError("FH descriptor: singular angle outside [0, 2 pi)");
    }
    if (j > 0 && !(s.theta > singularities[j - 1].theta)) {
      throw DomainError("FH descriptor: singular points not strictly ordered");
    }
  }
}

Complex FHDescriptor::evaluate(double theta) const {
  const double t = wrap_angle(theta);
  const Complex z = std::polar(1.0, t);
  const Complex i(0.0, 1.0);
  Complex log_val = v.evaluate_at(z);
  for (const auto& s : singularities) {
    if (s.trivial()) continue;
    log_val += i * s.beta * (t - s.theta);
    log_val += 2.0 * s.alpha * std::log(std::abs(z - s.z()));
    log_val += (t < s.theta ? 1.0 : -1.0) * i * std::numbers::pi * s.beta;
  }
  return std::exp(log_val);
}

FHDescriptor FHDescriptor::lowered(std::size_t j) const {
  if (j >= singularities.size()) throw PreconditionError("FH descriptor: bad index");
  FHDescriptor out = *this;
  out.singularities[j].beta -= 1.0;
  return out;
}

double beta_seminorm(const FHDescriptor& desc) {
  std::vector<double> re;
  for (std::size_t j = 0; j < desc.singularities.size(); ++j) {
    if (j == 0 && desc.singularities[0].trivial()) continue;
    re.push_back(desc.singularities[j].beta.real());
  }
  if (re.size() < 2) return 0.0;
  auto [lo, hi] = std::minmax_element(re.begin(), re.end());
  return *hi - *lo;
}

// ---------------------------------------------------------------------------
// Shifts

RootAngles root_angles(const SmoothUnimodalSymbol& sym, double lam) {
  if (!(lam > sym.min_value() && lam < sym.max_value())) {
    throw DomainError("root_angles: lambda outside (L, M)");
  }
  auto solve = [&](double a, double b, bool increasing) {
    for (int it = 0; it < kMaxBisection; ++it) {
      double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      bool below = sym.value(mid) < lam;
      ((below == increasing) ? a : b) = mid;
    }
    return 0.5 * (a + b);
  };
  return {solve(0.0, sym.theta_max(), true), solve(sym.theta_max(), kTwoPi, false)};
}

double shifted_ratio(const SmoothUnimodalSymbol& sym, const RootAngles& roots, double lam,
                     double theta) {
  double s1 = std::sin(0.5 * (theta - roots.theta1));
  double s2 = std::sin(0.5 * (theta - roots.theta2));
  return -(sym.value(theta) - lam) / (4.0 * s1 * s2);
}

SmoothShift shift_smooth_log_r(const SmoothUnimodalSymbol& sym, double lam,
                               std::size_t grid_size) {
  SmoothShift out;
  out.lam = lam;
  out.roots = root_angles(sym, lam);
  const double t1 = out.roots.theta1;
  const double t2 = out.roots.theta2;

  const double arc = t2 - t1;
  const double h = std::min(kRemovableStep, 0.25 * std::min(arc, kTwoPi - arc));
  const double r1m = shifted_ratio(sym, out.roots, lam, t1 - h);
  const double r1p = shifted_ratio(sym, out.roots, lam, t1 + h);
  const double r2m = shifted_ratio(sym, out.roots, lam, t2 - h);
  const double r2p = shifted_ratio(sym, out.roots, lam, t2 + h);

  const bool cached = grid_size == kDefaultGridSize;
  const double c1 = std::cos(0.5 * t1), n1 = std::sin(0.5 * t1);
  const double c2 = std::cos(0.5 * t2), n2 = std::sin(0.5 * t2);

  CircleGrid grid;
  grid.samples.resize(grid_size);
  double min_r = INFINITY;
  for (std::size_t l = 0; l < grid_size; ++l) {
    const double th = CircleGrid::angle(l, grid_size);
    const double d1 = std::remainder(th - t1, kTwoPi);
    const double d2 = std::remainder(th - t2, kTwoPi);
    double r;
    if (std::abs(d1) < h) {
      r = r1m + (r1p - r1m) * (d1 + h) / (2.0 * h);
    } else if (std::abs(d2) < h) {
      r = r2m + (r2p - r2m) * (d2 + h) / (2.0 * h);
    } else {
      double sh, ch, f;
      if (cached) {
        sh = default_half_angles().s[l];
        ch = default_half_angles().c[l];
        f = sym.grid_values()[l];
      } else {
        sh = std::sin(0.5 * th);
        ch = std::cos(0.5 * th);
        f = sym.value(th);
      }
      const double s1 = sh * c1 - ch * n1;
      const double s2 = sh * c2 - ch * n2;
      r = -(f - lam) / (4.0 * s1 * s2);
    }
    if (!(r > 0.0)) {
      throw InternalConsistencyError("shift_smooth: R is not positive at theta = " +
                                     std::to_string(th));
    }
    min_r = std::min(min_r, r);
    grid.samples[l] = std::log(r);
  }
  out.min_r = min_r;

  const int order = std::min<int>(sym.log_coeffs().order(), int(grid_size / 4));
  auto c = fourier_coeffs(grid, order);
  FourierSeries log_r(order);
  log_r.at(0) = c[0].real();
  for (int k = 1; k <= order; ++k) {
    Complex ck = 0.5 * (c[k] + std::conj(c[-k]));
    log_r.at(k) = ck;
    log_r.at(-k) = std::conj(ck);
  }
  out.log_r_tail = log_r.tail_mass(order / 2);
  out.log_r = std::move(log_r);
  return out;
}

FHDescriptor shift_smooth(const SmoothUnimodalSymbol& sym, double lam) {
  auto shift = shift_smooth_log_r(sym, lam);
  FHDescriptor desc;
  desc.v = shift.log_r;
  desc.v.at(0) += Complex(0.0, 0.5 * (shift.roots.theta1 - shift.roots.theta2) +
                                   std::numbers::pi);
  desc.singularities = {
      {0.0, 0.0, 0.0},
      {shift.roots.theta1, 0.5, 0.5},
      {shift.roots.theta2, 0.5, 0.5},
  };
  return desc;
}

double gamma_lambda(double gamma, double lam) {
  const double high = std::exp(kTwoPi * gamma);
  if (!(lam > 1.0 && lam < high)) {
    throw DomainError("gamma_lambda: lambda outside the gap (1, e^{2 pi gamma})");
  }
  return std::log((high - lam) / (lam - 1.0)) / kTwoPi;
}

FHDescriptor shift_two_level(const TwoLevelSymbol& sym, double lam) {
  const double g = gamma_lambda(sym.gamma(), lam);
  const Complex i(0.0, 1.0);
  const Complex beta1 = 0.5 + i * g;
  FHDescriptor desc;
  desc.v = FourierSeries(0);
  desc.v.at(0) = i * std::numbers::pi + std::log(lam - 1.0) +
                 i * beta1 * (sym.theta1() - sym.theta2());
  desc.singularities = {
      {0.0, 0.0, 0.0},
      {sym.theta1(), 0.0, beta1},
      {sym.theta2(), 0.0, 0.5 - i * g},
  };
  return desc;
}

int near_period(const TwoLevelSymbol& sym) {
  if (!sym.rational_arc()) {
    throw UnsupportedError("near_period: arc length is not a rational multiple of 2 pi");
  }
  return sym.rational_arc()->q;
}

int omega(int l, int m) {
  l = std::abs(l);
  m = std::abs(m);
  if (m == 0) throw DomainError("omega: m must be nonzero");
  if (l == 0) return 2;
  if (std::gcd(l, m) != 1) throw DomainError("omega: l and m must be coprime");
  return (l % 2 == 1 && m % 2 == 1) ? m : 2 * m;
}

RationalArc arc_fraction_from_jump(int l, int m) {
  if (m <= 0 || l < 0 || l >= m) throw DomainError("arc_fraction: need 0 <= l < m");
  int num = m - l;
  int den = 2 * m;
  int g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace tspec
