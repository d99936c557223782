#pragma once

#include <vector>

#include "tspec/oracle.hpp"
#include "tspec/symbols.hpp"

namespace tspec {

/// H_n(λ) = 2γ^(λ) ln(n|z_1 - z_2|) - 2 arg Γ(1/2 + iγ^(λ)).
double H_n(const TwoLevelSymbol& sym, double lam, int n);

/// (θ2 - θ1) n/(2π) + H_n(λ)/π; eigenvalues in the gap sit where this is k + 1/2.
double gap_phase(const TwoLevelSymbol& sym, double lam, int n);

struct GapEigenvalue {
  int k = 0;
  double lam = 0.0;
  /// gap_phase - (k + 1/2).
  double phase_residual = 0.0;
};

struct GapSpectrum {
  int n = 0;
  double eps = 0.0;
  std::vector<GapEigenvalue> entries;  // k ascending, λ descending
};

/// I_ε = (1 + ε, e^{2πγ} - ε).
struct GapInterval {
  double lo;
  double hi;
};
GapInterval gap_interval(const TwoLevelSymbol& sym, double eps);

/// Predicted eigenvalues in I_ε: one per integer k with k + 1/2 inside the phase
/// range of I_ε, found by bisection. Empty when no half-integer is reached.
GapSpectrum predict_gap_spectrum(const TwoLevelSymbol& sym, int n, double eps);

/// Eigenvalues of T_n(f) through the arc-centred (real symmetric) rotation.
ExactSpectrum two_level_spectrum(const TwoLevelSymbol& sym, int n);

/// Exact eigenvalues inside I_ε, each labelled by the nearest k with phase k + 1/2.
GapSpectrum exact_gap_spectrum(const TwoLevelSymbol& sym, const ExactSpectrum& spec,
                               double eps);

struct PeriodicPair {
  int k = 0;
  double lam_n = 0.0;
  double lam_nq = 0.0;
  double distance = 0.0;
  /// Distance from lam_n to the closest entry of the n+q spectrum.
  double nearest_distance = 0.0;
};

struct PeriodicityMatch {
  int n = 0;
  int q = 0;
  int p = 0;
  std::vector<PeriodicPair> pairs;
  std::vector<int> unmatched;
  /// max over pairs of distance · n ln n.
  double max_scaled_distance = 0.0;
  /// min over pairs of nearest_distance · n ln n.
  double min_scaled_nearest = 0.0;
};

/// Pairs entry k of spec_n with entry k + p of spec_nq.
PeriodicityMatch match_near_periodic(const GapSpectrum& spec_n, const GapSpectrum& spec_nq,
                                     int q, int p);

}  // namespace tspec
