// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_SEARCH_HPP
#define EFSCHED_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "efsched/efficiency.hpp"
#include "efsched/instance.hpp"
#include "efsched/payments.hpp"

namespace efsched {

/// Streams every set partition of {0..jobs-1} into at most max_bundles
/// nonempty bundles, each exactly once, in restricted-growth order.
class PartitionEnumerator {
 public:
  PartitionEnumerator(int jobs, int max_bundles);

  std::optional<Partition> next();

 private:
  int jobs_;
  int max_bundles_;
  bool started_;
  bool exhausted_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
};

/// Number of partitions of `jobs` into at most max_bundles bundles,
/// saturating at cap+1 so guard checks stay overflow-free.
std::uint64_t count_partitions(int jobs, int max_bundles, std::uint64_t cap);

struct SearchOptions {
  int machine_cap = 10;
  std::uint64_t partition_guard = 1'000'000;   // Bell-number bound
  std::uint64_t map_guard = 10'000'000;        // m^n bound
  int threads = 1;
};

struct OptSearchResult {
  ExtendedCost makespan;
  Allocation allocation;  // lexicographically smallest witness
  std::uint64_t maps_examined;
};

/// Unconstrained minimum makespan by exhaustive enumeration of all m^n
/// job-to-machine maps (branches whose partial makespan already meets the
/// incumbent are cut). GuardError when m^n exceeds the map guard.
OptSearchResult opt_makespan(const CostMatrix& costs, const SearchOptions& options = {});

struct EfSearchResult {
  ExtendedCost makespan;
  Allocation allocation;
  PaymentVector payments;
  std::uint64_t partitions_examined;
};

/// Minimum makespan over every envy-free-implementable allocation: each
/// partition of the jobs is placed by every optimal (hence locally
/// efficient) matching and the best makespan wins. Deterministic for any
/// thread count; ties resolved by smallest makespan then lexicographic
/// allocation.
EfSearchResult min_ef_makespan(const CostMatrix& costs, const SearchOptions& options = {});

/// Joined result of the two searches.
struct SearchResult {
  ExtendedCost opt_makespan;
  Allocation opt_allocation;
  ExtendedCost ef_makespan;
  Allocation ef_allocation;
  PaymentVector ef_payments;
  std::optional<Rational> ratio;  // ef / opt when both finite
  std::uint64_t partitions_examined;
};

SearchResult ef_gap_report(const CostMatrix& costs, const SearchOptions& options = {});

}  // namespace efsched

#endif  // EFSCHED_SEARCH_HPP
