#pragma once

#include <complex>

namespace tspec {

using Complex = std::complex<double>;

/// Principal value of log Γ(z), i.e. Im in (-π, π].
///
/// Throws DomainError at the poles z = 0, -1, -2, ... and on non-finite input.
Complex log_gamma(Complex z);

/// log Γ(z) continued analytically from the positive real axis (branch cut on
/// the negative real axis). Differs from log_gamma() by a multiple of 2πi.
Complex log_gamma_analytic(Complex z);

/// Continuous branch of arg Γ(1/2 + iy), normalized to 0 at y = 0. Odd in y.
double arg_gamma_half(double y);

/// log G(z) for Barnes' G-function, on the branch continued from log G(1) = 0
/// along which log G(z+1) = log Γ(z) + log G(z) holds exactly (with the
/// analytic log Γ).
Complex log_barnes_g(Complex z);

}  // namespace tspec
