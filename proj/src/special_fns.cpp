#include "tspec/special_fns.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tspec/errors.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606065;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
// ζ'(-1)
constexpr double kZetaPrimeMinusOne = -0.1654211437004509292139;

// ζ(k) - 1 for k = 2, 3, ..., 31.
constexpr std::array<double, 30> kZetaMinusOne = {
    0.64493406684822643647,  0.2020569031595942854,   0.082323233711138191516,
    0.036927755143369926331, 0.017343061984449139715, 0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10};

// Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..12.
constexpr std::array<double, 12> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0};

// B_{2k+2} / (4 k (k+1)), k = 1..10, for the asymptotic series of log G(1+w).
constexpr std::array<double, 10> kBarnes = {
    (-1.0 / 30.0) / 8.0,
    (1.0 / 42.0) / 24.0,
    (-1.0 / 30.0) / 48.0,
    (5.0 / 66.0) / 80.0,
    (-691.0 / 2730.0) / 120.0,
    (7.0 / 6.0) / 168.0,
    (-3617.0 / 510.0) / 224.0,
    (43867.0 / 798.0) / 288.0,
    (-174611.0 / 330.0) / 360.0,
    (854513.0 / 138.0) / 440.0};

constexpr double kStirlingThreshold = 15.0;
constexpr double kBarnesThreshold = 20.0;
constexpr double kTaylorRadius = 0.3;
constexpr int kMaxShift = 100000;

void require_finite(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log(1 + x) accurate for small complex x.
Complex log1p_complex(Complex x) {
  const double re = 0.5 * std::log1p(2.0 * x.real() + std::norm(x));
  const double im = std::atan2(x.imag(), 1.0 + x.real());
  return {re, im};
}

// log Γ(2 + x), |x| <= kTaylorRadius.
Complex log_gamma_near_two(Complex x) {
  Complex power = x;
  Complex sum = (1.0 - kEulerGamma) * x;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    power *= x;
    const int k = static_cast<int>(i) + 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * kZetaMinusOne[i] * power / static_cast<double>(k);
  }
  return sum;
}

Complex log_gamma_stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series;
}

}  // namespace

Complex log_gamma_analytic(Complex z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z)) {
    throw DomainError("log_gamma: pole of Gamma at z = " + std::to_string(z.real()));
  }
  if (std::abs(z - 2.0) <= kTaylorRadius) {
    return log_gamma_near_two(z - 2.0);
  }
  if (std::abs(z - 1.0) <= kTaylorRadius) {
    // Γ(z) = Γ(z + 1) / z with z + 1 near 2.
    return log_gamma_near_two(z - 1.0) - log1p_complex(z - 1.0);
  }
  const double shift = std::max(0.0, std::ceil(kStirlingThreshold - z.real()));
  if (shift > kMaxShift) {
    throw DomainError("log_gamma: argument too far into the left half-plane");
  }
  const int steps = static_cast<int>(shift);
  Complex correction = 0.0;
  for (int k = 0; k < steps; ++k) {
    correction += std::log(z + static_cast<double>(k));
  }
  return log_gamma_stirling(z + shift) - correction;
}

Complex log_gamma(Complex z) {
  Complex value = log_gamma_analytic(z);
  const double turns = std::round(value.imag() / (2.0 * kPi));
  double im = value.imag() - 2.0 * kPi * turns;
  if (im <= -kPi) im += 2.0 * kPi;
  if (im > kPi) im -= 2.0 * kPi;
  return {value.real(), im};
}

double arg_gamma_half(double y) {
  if (!std::isfinite(y)) {
    throw DomainError("arg_gamma_half: non-finite argument");
  }
  // The analytic log Γ has no cut on Re z = 1/2, so its imaginary part is the
  // continuous argument; evaluating at |y| makes the oddness exact.
  const double value = log_gamma_analytic(Complex(0.5, std::abs(y))).imag();
  return y < 0.0 ? -value : value;
}

Complex log_barnes_g(Complex z) {
  require_finite(z, "log_barnes_g");
  if (is_nonpositive_integer(z)) {
    throw DomainError("log_barnes_g: zero of G (pole of log G) at z = " +
                      std::to_string(z.real()));
  }
  const double shift = std::max(0.0, std::ceil(kBarnesThreshold - z.real()));
  if (shift > kMaxShift) {
    throw DomainError("log_barnes_g: argument too far into the left half-plane");
  }
  const int steps = static_cast<int>(shift);

  // Asymptotic expansion of log G(1 + w) at w = z + shift - 1.
  const Complex w = z + shift - 1.0;
  const Complex log_w = std::log(w);
  const Complex inv2 = 1.0 / (w * w);
  Complex series = 0.0;
  Complex power = inv2;
  for (double c : kBarnes) {
    series += c * power;
    power *= inv2;
  }
  const Complex shifted = 0.5 * w * w * log_w - 0.75 * w * w +
                          0.5 * w * std::log(2.0 * kPi) - log_w / 12.0 +
                          kZetaPrimeMinusOne + series;

  // log G(z) = log G(z + N) - sum_{k<N} log Γ(z + k).
  Complex correction = 0.0;
  for (int k = 0; k < steps; ++k) {
    correction += log_gamma_analytic(z + static_cast<double>(k));
  }
  return shifted - correction;
}

}  // namespace tspec
