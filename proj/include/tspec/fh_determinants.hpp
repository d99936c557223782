#pragma once

#include "tspec/symbols.hpp"

namespace tspec {

/// ν_j = exp{-iπ(Σ_{p<j} α_p - Σ_{p>j} α_p)} Π_{p≠j} (z_j/z_p)^{α_p} |z_j - z_p|^{2β_p}.
/// Throws DomainError for coincident points or a bad index.
Complex nu_factor(const FHDescriptor& desc, std::size_t j);

/// Leading sum Σ_j n^{2β_j-1} z_j^{-n} ν_j^{-1} Γ(1+α_j-β_j)/Γ(α_j+β_j) b_-(z_j)/b_+(z_j).
/// Terms with α_j + β_j at a pole of Γ contribute 0.
/// Throws DomainError unless every Re β_j lies in (-1/2, 1/2].
Complex asymptotic_phi_hat_zero(const FHDescriptor& desc, int n);

struct AsymptoticDet {
  double log_magnitude = 0.0;
  double phase = 0.0;  // in (-π, π]
  int n = 0;
  /// The error term is O(n^{error_order}); NaN when the seminorm is >= 1.
  double error_order = 0.0;
  /// Bound on the truncated Σ k V_k V_{-k} tail.
  double truncation_tail = 0.0;

  Complex log() const { return {log_magnitude, phase}; }
};

/// Leading Fisher-Hartwig asymptotics of log D_n(F). Throws DomainError when some
/// 1 + α_j ± β_j or 1 + 2α_j is a pole of Barnes' G.
AsymptoticDet asymptotic_log_det(const FHDescriptor& desc, int n);

/// Fourier coefficients, |k| <= max_index, of the symbol with one singular point
/// e^{iθ}, θ in (0, 2π), and V = 0: |z - z_1|^{2α} e^{iβ(θ - θ_1)} g_{z_1,β}. In terms of
/// w = z/z_1 this is |1 - w|^{2α}(-w)^β, whose k-th coefficient is
/// (-1)^k Γ(1+2α) / (Γ(1+α-β+k) Γ(1+α+β-k)).
FourierSeries pure_fh_coeffs(double theta, Complex alpha, Complex beta, int max_index);

/// Descriptor of pure_fh_coeffs().
FHDescriptor pure_fh_descriptor(double theta, Complex alpha, Complex beta);

}  // namespace tspec
