// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_EFFICIENCY_HPP
#define EFSCHED_EFFICIENCY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "efsched/instance.hpp"

namespace efsched {

/// Set partition of jobs in restricted-growth form: bundle ids are 0-based,
/// job 0 is in bundle 0 and each new bundle id is the smallest unused one.
class Partition {
 public:
  explicit Partition(std::vector<int> restricted_growth);

  static Partition singletons(int jobs);

  int jobs() const noexcept { return static_cast<int>(bundle_of_job_.size()); }
  int bundle_count() const noexcept { return bundle_count_; }
  int bundle_of(int job) const { return bundle_of_job_.at(job); }
  const std::vector<int>& bundle_ids() const noexcept { return bundle_of_job_; }

  /// Job lists per bundle, ascending.
  std::vector<std::vector<int>> bundles() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.bundle_of_job_ == b.bundle_of_job_;
  }

 private:
  std::vector<int> bundle_of_job_;
  int bundle_count_;
};

/// Canonical partition induced by an allocation together with the machine
/// currently holding each bundle.
std::pair<Partition, std::vector<int>> induced_partition(const Allocation& alloc);

/// Injective placement of bundles on machines; machines without a bundle
/// stay empty at cost 0.
struct BundleAssignment {
  std::vector<int> machine_of_bundle;
  ExtendedCost total_cost;
};

/// Per-bundle cost on each machine: table[bundle][machine].
std::vector<std::vector<ExtendedCost>> bundle_cost_table(const CostMatrix& costs,
                                                         const Partition& partition);

/// Minimum-total-cost injective placement of the partition's bundles,
/// computed as an exact min-cost bipartite matching. Among optimal
/// placements the lexicographically smallest machine_of_bundle vector is
/// returned. Throws InfeasibleAssignmentError when every placement is
/// infinite.
BundleAssignment min_cost_assignment(const CostMatrix& costs, const Partition& partition);

struct LocalEfficiencyCheck {
  bool locally_efficient;
  ExtendedCost allocation_cost;
  ExtendedCost minimum_cost;
  /// Present when not locally efficient: machine i should take the bundle
  /// currently held by machine improving_permutation[i].
  std::optional<std::vector<int>> improving_permutation;
};

/// An allocation is locally efficient when no permutation of its bundles
/// over the machines lowers the total cost; decided by exact comparison
/// against the min-cost matching of the induced partition.
LocalEfficiencyCheck is_locally_efficient(const CostMatrix& costs, const Allocation& alloc);

/// All placements achieving exactly the minimum total, lexicographic order.
/// Enumeration is over injective placements, so machines() must not exceed
/// machine_cap (GuardError otherwise).
std::vector<BundleAssignment> enumerate_optimal_assignments(const CostMatrix& costs,
                                                            const Partition& partition,
                                                            int machine_cap = 10);

/// Total cost after machine i takes the bundle currently on machine
/// permutation[i]; permutation must be a permutation of 0..m-1.
ExtendedCost permuted_total_cost(const CostMatrix& costs, const Allocation& alloc,
                                 const std::vector<int>& permutation);

/// Certificate checker: does the permutation strictly lower total cost?
bool improves_total_cost(const CostMatrix& costs, const Allocation& alloc,
                         const std::vector<int>& permutation);

}  // namespace efsched

#endif  // EFSCHED_EFFICIENCY_HPP
