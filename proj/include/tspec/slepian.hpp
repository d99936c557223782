#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "tspec/oracle.hpp"

namespace tspec {

/// Time interval T = (t1, t2), band S = (0, s2), bandwidth parameter c, step δ.
/// The matrix size is n = [c s2/δ].
struct SlepianSetup {
  double t1 = 8.0 * std::numbers::pi;
  double t2 = 16.0 * std::numbers::pi;
  double s2 = 1.0;
  double c = 16.0;
  double delta = 1.0 / 16.0;
  double b = 0.0;

  int n() const;
  /// Setup with c chosen so that n() == size.
  SlepianSetup with_size(int size) const;
};

/// Throws DomainError unless 0 < δ(t2 - t1) < 2π and n >= 8.
void validate(const SlepianSetup& setup);

/// T_n(χ) for χ the indicator of an arc of length δ(t2 - t1). The arc is centred on
/// θ = 0, which leaves the spectrum of the (δt1, δt2) arc unchanged and makes the
/// matrix real symmetric.
ToeplitzMatrix slepian_matrix(const SlepianSetup& setup);

/// k = [|S||T|c/(2π) + b ln c/π²]; values within 1e-9 of an integer snap to it.
/// Throws DomainError if the bracket argument is not positive.
int slepian_index(const SlepianSetup& setup);

/// Which end of the spectrum the index counts from.
enum class SlepianIndexing { kDescendingZeroBased, kDescendingOneBased };
std::string to_string(SlepianIndexing indexing);

struct SlepianRow {
  double c = 0.0;
  int n = 0;
  int k = 0;
  double lambda_k = 0.0;
  double target = 0.0;
  double deviation = 0.0;
  /// The same quantities under the other indexing.
  double alt_lambda_k = 0.0;
  double alt_deviation = 0.0;
};

struct SlepianReport {
  SlepianIndexing indexing = SlepianIndexing::kDescendingZeroBased;
  std::vector<SlepianRow> rows;
  bool monotone = false;
};

/// λ_k for each matrix size in `sizes` (c adjusted per size). The indexing reported
/// is the one whose deviations from (1 + e^b)^{-1} decrease monotonically, with the
/// smaller final deviation breaking ties.
SlepianReport slepian_limit_check(const SlepianSetup& base, const std::vector<int>& sizes);

}  // namespace tspec
