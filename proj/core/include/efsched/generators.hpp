// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_GENERATORS_HPP
#define EFSCHED_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "efsched/instance.hpp"

namespace efsched {

/// Parameters of the hard instance family. With n_tilde = 2^k the family
/// has n = n_tilde/k + 1 jobs and m = n + l machines where 2^l = k.
/// k must itself be a power of two so that l is integral.
struct FamilyParams {
  int k;
  std::int64_t n_tilde;
  int l;
  int n;
  int m;

  friend bool operator==(const FamilyParams& a, const FamilyParams& b) {
    return a.k == b.k && a.n_tilde == b.n_tilde && a.l == b.l && a.n == b.n && a.m == b.m;
  }
};

struct FamilyInstance {
  CostMatrix costs;
  FamilyParams params;
};

inline constexpr std::int64_t kDefaultEntryCap = 10'000'000;

/// Throws GuardError when k is not a power of two or the derived grid
/// cannot be represented.
FamilyParams derive_family_params(int k);

/// The exact hard family: c_{i,j} = 1 on the diagonal,
/// 1 - (i-j)*k / (2*(n_tilde - j + 1)) below it, infinity above it, and
/// constant 2^(i-n) on the l high machines (1-based i, j).
FamilyInstance family_instance(int k, std::int64_t entry_cap = kDefaultEntryCap);

/// Grid position in a validation report, 1-based as serialized.
struct CellRef {
  int machine;
  int job;

  friend bool operator==(const CellRef& a, const CellRef& b) {
    return a.machine == b.machine && a.job == b.job;
  }
};

/// Structural checks of a generated matrix:
///  (a) every finite entry is >= 1/2, with the entries equal to 1/2 listed,
///  (b) c_{i,j} - c_{i+1,j} = k / (2*(n_tilde - j + 1)) for i < n, i > j,
///  (c) diagonal entries equal 1,
///  (d) entries above the diagonal in rows 1..n are infinite.
struct FamilyValidationReport {
  bool ok;
  std::vector<CellRef> below_half;
  std::vector<CellRef> half_equalities;
  std::vector<CellRef> bad_differences;
  std::vector<CellRef> bad_diagonal;
  std::vector<CellRef> missing_infinities;
};

FamilyValidationReport validate_family_instance(const CostMatrix& costs, const FamilyParams& params);

/// Seeded deterministic instance with entries drawn from [cost_lo, cost_hi]
/// and independent infinity probability per entry. A column that comes out
/// all-infinite is redrawn, so every job stays runnable.
CostMatrix random_instance(int machines, int jobs, std::uint64_t seed, const Rational& cost_lo,
                           const Rational& cost_hi, double inf_probability);

}  // namespace efsched

#endif  // EFSCHED_GENERATORS_HPP
