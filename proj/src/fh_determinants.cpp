#include "tspec/fh_determinants.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tspec/errors.hpp"
#include "tspec/special_fns.hpp"

namespace tspec {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Γ has poles at 0, -1, -2, ...
bool gamma_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

double log_chord(double t1, double t2) {
  double d = std::abs(std::polar(1.0, t1) - std::polar(1.0, t2));
  if (d == 0.0) throw DomainError("coincident singular points");
  return std::log(d);
}

}  // namespace

Complex nu_factor(const FHDescriptor& desc, std::size_t j) {
  const auto& s = desc.singularities;
  if (j >= s.size()) throw DomainError("nu_factor: singularity index out of range");
  Complex log_nu{};
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p == j) continue;
    const double sign = p < j ? 1.0 : -1.0;
    log_nu += -kI * kPi * sign * s[p].alpha;
    log_nu += kI * s[p].alpha * (s[j].theta - s[p].theta);
    log_nu += 2.0 * s[p].beta * log_chord(s[j].theta, s[p].theta);
  }
  return std::exp(log_nu);
}

Complex asymptotic_phi_hat_zero(const FHDescriptor& desc, int n) {
  desc.validate();
  Complex sum{};
  for (std::size_t j = 0; j < desc.singularities.size(); ++j) {
    const auto& s = desc.singularities[j];
    const double re_beta = s.beta.real();
    if (!(re_beta > -0.5 && re_beta <= 0.5 + 1e-14)) {
      throw DomainError("asymptotic_phi_hat_zero: Re beta outside (-1/2, 1/2]");
    }
    const Complex ab = s.alpha + s.beta;
    if (gamma_pole(ab)) continue;
    const Complex num_arg = 1.0 + s.alpha - s.beta;
    if (gamma_pole(num_arg)) throw DomainError("asymptotic_phi_hat_zero: Gamma pole");
    const auto wh = wiener_hopf_eval(desc.v, s.z());
    Complex term = (2.0 * s.beta - 1.0) * std::log(double(n)) - kI * (double(n) * s.theta) -
                   std::log(nu_factor(desc, j)) + log_gamma(num_arg) - log_gamma(ab) +
                   wh.log_b_minus - wh.log_b_plus;
    sum += std::exp(term);
  }
  return sum;
}

AsymptoticDet asymptotic_log_det(const FHDescriptor& desc, int n) {
  desc.validate();
  const auto& s = desc.singularities;
  const auto cross = weighted_cross_sum(desc.v);
  Complex log_d = double(n) * desc.v[0] + cross.value;

  for (const auto& sj : s) {
    if (sj.trivial()) continue;
    const auto wh = wiener_hopf_eval(desc.v, sj.z());
    log_d += (-sj.alpha + sj.beta) * wh.log_b_plus + (-sj.alpha - sj.beta) * wh.log_b_minus;
    log_d += (sj.alpha * sj.alpha - sj.beta * sj.beta) * std::log(double(n));
    log_d += log_barnes_g(1.0 + sj.alpha + sj.beta) + log_barnes_g(1.0 + sj.alpha - sj.beta) -
             log_barnes_g(1.0 + 2.0 * sj.alpha);
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      if (s[j].trivial() || s[k].trivial()) continue;
      log_d += 2.0 * (s[j].beta * s[k].beta - s[j].alpha * s[k].alpha) *
               log_chord(s[j].theta, s[k].theta);
      log_d += (s[j].alpha * s[k].beta - s[k].alpha * s[j].beta) * kI *
               (s[k].theta - s[j].theta - kPi);
    }
  }

  AsymptoticDet out;
  out.n = n;
  out.log_magnitude = log_d.real();
  out.phase = std::remainder(log_d.imag(), 2.0 * kPi);
  const double norm = beta_seminorm(desc);
  out.error_order = norm < 1.0 ? norm - 1.0 : std::numeric_limits<double>::quiet_NaN();
  out.truncation_tail = cross.tail_bound;
  return out;
}

FourierSeries pure_fh_coeffs(double theta, Complex alpha, Complex beta, int max_index) {
  if (!(theta > 0.0 && theta < 2.0 * kPi)) throw DomainError("pure_fh_coeffs: theta outside (0, 2 pi)");
  if (!(alpha.real() > -0.5)) throw DomainError("pure_fh_coeffs: Re alpha <= -1/2");
  const Complex num = log_gamma(1.0 + 2.0 * alpha);
  FourierSeries out(max_index);
  for (int k = -max_index; k <= max_index; ++k) {
    const Complex a = 1.0 + alpha - beta + double(k);
    const Complex b = 1.0 + alpha + beta - double(k);
    // 1/Γ vanishes at the poles.
    if (gamma_pole(a) || gamma_pole(b)) continue;
    const Complex log_c = num - log_gamma(a) - log_gamma(b) - kI * (double(k) * theta);
    out.at(k) = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(log_c);
  }
  return out;
}

FHDescriptor pure_fh_descriptor(double theta, Complex alpha, Complex beta) {
  FHDescriptor d;
  d.v = FourierSeries(0);
  d.singularities = {{0.0, 0.0, 0.0}, {theta, alpha, beta}};
  d.validate();
  return d;
}

}  // namespace tspec
