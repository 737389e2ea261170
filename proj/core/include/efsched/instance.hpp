// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_INSTANCE_HPP
#define EFSCHED_INSTANCE_HPP

#include <optional>
#include <vector>

#include "efsched/rational.hpp"

namespace efsched {

// All indices in this API are 0-based. Serialized artifacts and reports
// use 1-based machine/job numbers; the io layer converts.

/// An m x n grid of extended costs, row = machine, column = job.
class CostMatrix {
 public:
  CostMatrix(int machines, int jobs, std::vector<ExtendedCost> entries);

  int machines() const noexcept { return machines_; }
  int jobs() const noexcept { return jobs_; }

  const ExtendedCost& at(int machine, int job) const;

  /// True when every job has at least one machine of finite cost.
  /// Instances failing this are rejected at load time.
  bool every_job_runnable() const;

 private:
  int machines_;
  int jobs_;
  std::vector<ExtendedCost> entries_;  // row-major
};

/// Total assignment of jobs to machines; indivisible jobs, every job on
/// exactly one machine.
struct Allocation {
  std::vector<int> machine_of_job;

  int jobs() const noexcept { return static_cast<int>(machine_of_job.size()); }
  bool valid_for(int machines) const noexcept;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.machine_of_job == b.machine_of_job;
  }
};

struct PaymentVector {
  std::vector<Rational> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Allocation plus payments, the pair an envy-freeness check applies to.
struct Mechanism {
  Allocation allocation;
  PaymentVector payments;
};

/// Jobs of each machine, ascending job index per machine.
std::vector<std::vector<int>> bundles_by_machine(const Allocation& alloc, int machines);

/// Cost to `machine` of processing the given job set; infinity as soon as
/// one job is infinite there, 0 for an empty set.
ExtendedCost bundle_cost(const CostMatrix& costs, int machine, const std::vector<int>& jobs);

ExtendedCost compute_load(const CostMatrix& costs, const Allocation& alloc, int machine);

/// Maximum load over all machines; 0 when every machine is empty.
ExtendedCost makespan(const CostMatrix& costs, const Allocation& alloc);

ExtendedCost total_allocation_cost(const CostMatrix& costs, const Allocation& alloc);

/// Quasi-linear utility: payment minus load. Minus infinity when the
/// agent's load is infinite.
struct AgentUtility {
  bool finite;
  Rational value;  // meaningful only when finite
};

AgentUtility utility(const CostMatrix& costs, const Mechanism& mech, int agent);

struct EnvyWitness {
  int envious;  // machine i preferring...
  int envied;   // ...machine j's bundle and payment
};

struct EnvyCheck {
  bool envy_free;
  std::optional<EnvyWitness> witness;  // first violating ordered pair
};

/// Checks p_i - c_i(B_i) >= p_j - c_i(B_j) over all ordered machine pairs.
/// An infinite c_i(B_j) makes the pair vacuous; an infinite own load fails
/// against any bundle of finite cost to i.
EnvyCheck is_envy_free(const CostMatrix& costs, const Mechanism& mech);

}  // namespace efsched

#endif  // EFSCHED_INSTANCE_HPP
