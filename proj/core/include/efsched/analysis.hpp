// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_ANALYSIS_HPP
#define EFSCHED_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "efsched/generators.hpp"
#include "efsched/instance.hpp"

namespace efsched {

/// Moves every bundle from machine i to machine i+1. Requires the last
/// machine to be empty (throws std::invalid_argument otherwise); machine 0
/// ends up empty.
Allocation cyclic_shift(const Allocation& alloc, int machines);

/// Exact cost change of the cyclic shift on a hard-family instance, split
/// into the contribution of machines 1..n-1 (nonpositive) and machines
/// n..n+l-1 (nonnegative). total = low + high.
struct ShiftDeltaReport {
  Rational total;
  Rational low_machines_delta;
  Rational high_machines_delta;
};

ShiftDeltaReport shift_cost_delta(const CostMatrix& costs, const Allocation& alloc,
                                  const FamilyParams& params);

inline constexpr std::uint64_t kHarmonicExactLimit = 1'000'000;

/// H_k = 1 + 1/2 + ... + 1/k. Exact up to kHarmonicExactLimit, after that
/// the ln k + gamma + 1/(2k) approximation.
struct HarmonicValue {
  bool exact;
  Rational exact_value;  // set only when exact
  double value;
};

HarmonicValue harmonic(std::uint64_t k);

/// The two sides of the cyclic-shift accounting at exponent k (n_tilde =
/// 2^k): the shift raises cost on the high machines by less than
/// (l+3)*2^l and lowers it on the low machines by at least
/// (k/2) * (H_{2^k/k} - H_{3k}). The argument only produces a
/// contradiction -- "binds" -- once the decrease exceeds the increase.
struct AccountingReport {
  int k;
  int l;
  Rational increase_bound;  // (l+3) * 2^l, exact
  double decrease_bound;
  std::optional<Rational> decrease_bound_exact;  // when both harmonic args are exact
  double log_formula_decrease;  // (k/2) * (k ln 2 - ln k - ln 3k), the displayed approximation
  double gap;                     // decrease - increase
  bool proof_binds;               // gap > 0
  bool high_harmonic_exact;
  bool low_harmonic_exact;
};

/// k must be a power of two (so l = log2 k is integral); GuardError otherwise.
AccountingReport proof_accounting(int k);

/// Smallest admissible k with proof_binds, by ascending scan over powers of
/// two up to 2^20.
int proof_threshold();

/// Job-count structure implied by a makespan below 2^l on the hard family:
///  (1) fewer than 2^(l+1) jobs per machine,
///  (2) fewer than 2^l / 2^(i-n) jobs on each high machine i,
///  (3) fewer than 2^l jobs on the high machines combined.
/// When the makespan is not below 2^l nothing is asserted.
struct JobCountReport {
  ExtendedCost observed_makespan;
  Rational threshold;  // 2^l
  bool hypothesis_met;
  std::vector<int> jobs_per_machine;
  int high_machine_total;
  bool property1_ok;
  bool property2_ok;
  bool property3_ok;
  std::vector<int> property1_violations;  // 1-based machines
  std::vector<int> property2_violations;  // 1-based machines
  /// Machine n holding exactly 2^(l+1) jobs including job 1: the one spot
  /// where the per-job cost bound is not strict, flagged instead of failed.
  std::vector<int> property1_flagged;
};

JobCountReport job_count_check(const CostMatrix& costs, const Allocation& alloc,
                          const FamilyParams& params);

}  // namespace efsched

#endif  // EFSCHED_ANALYSIS_HPP
