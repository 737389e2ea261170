// SPDX-License-Identifier: Apache-2.0
#include "efsched/instance.hpp"

#include <stdexcept>
#include <string>

namespace efsched {

namespace {

void require_valid_allocation(const CostMatrix& costs, const Allocation& alloc) {
  if (alloc.jobs() != costs.jobs()) {
    throw std::invalid_argument("allocation covers " + std::to_string(alloc.jobs()) +
                                " jobs, instance has " + std::to_string(costs.jobs()));
  }
  if (!alloc.valid_for(costs.machines())) {
    throw std::invalid_argument("allocation assigns a machine out of range");
  }
}

}  // namespace

CostMatrix::CostMatrix(int machines, int jobs, std::vector<ExtendedCost> entries)
    : machines_(machines), jobs_(jobs), entries_(std::move(entries)) {
  if (machines_ < 1) throw std::invalid_argument("cost matrix needs at least one machine");
  if (jobs_ < 0) throw std::invalid_argument("negative job count");
  if (entries_.size() != static_cast<std::size_t>(machines_) * jobs_) {
    throw std::invalid_argument("cost matrix entry count does not match dimensions");
  }
}

const ExtendedCost& CostMatrix::at(int machine, int job) const {
  if (machine < 0 || machine >= machines_) {
    throw std::out_of_range("machine index " + std::to_string(machine + 1) + " out of 1.." +
                            std::to_string(machines_));
  }
  if (job < 0 || job >= jobs_) {
    throw std::out_of_range("job index " + std::to_string(job + 1) + " out of 1.." +
                            std::to_string(jobs_));
  }
  return entries_[static_cast<std::size_t>(machine) * jobs_ + job];
}

bool CostMatrix::every_job_runnable() const {
  for (int j = 0; j < jobs_; ++j) {
    bool finite = false;
    for (int i = 0; i < machines_ && !finite; ++i) {
      finite = at(i, j).is_finite();
    }
    if (!finite) return false;
  }
  return true;
}

bool Allocation::valid_for(int machines) const noexcept {
  for (int machine : machine_of_job) {
    if (machine < 0 || machine >= machines) return false;
  }
  return true;
}

std::vector<std::vector<int>> bundles_by_machine(const Allocation& alloc, int machines) {
  std::vector<std::vector<int>> bundles(machines);
  for (int j = 0; j < alloc.jobs(); ++j) {
    bundles.at(alloc.machine_of_job[j]).push_back(j);
  }
  return bundles;
}

ExtendedCost bundle_cost(const CostMatrix& costs, int machine, const std::vector<int>& jobs) {
  ExtendedCost total;
  for (int job : jobs) {
    const ExtendedCost& entry = costs.at(machine, job);
    if (entry.is_infinite()) return ExtendedCost::infinity();
    total += entry;
  }
  return total;
}

ExtendedCost compute_load(const CostMatrix& costs, const Allocation& alloc, int machine) {
  require_valid_allocation(costs, alloc);
  if (machine < 0 || machine >= costs.machines()) {
    throw std::out_of_range("machine index " + std::to_string(machine + 1) + " out of 1.." +
                            std::to_string(costs.machines()));
  }
  ExtendedCost load;
  for (int j = 0; j < alloc.jobs(); ++j) {
    if (alloc.machine_of_job[j] == machine) {
      load += costs.at(machine, j);
      if (load.is_infinite()) return load;
    }
  }
  return load;
}

ExtendedCost makespan(const CostMatrix& costs, const Allocation& alloc) {
  require_valid_allocation(costs, alloc);
  ExtendedCost best;  // empty machines contribute 0
  for (int i = 0; i < costs.machines(); ++i) {
    ExtendedCost load = compute_load(costs, alloc, i);
    if (load > best) best = load;
  }
  return best;
}

ExtendedCost total_allocation_cost(const CostMatrix& costs, const Allocation& alloc) {
  require_valid_allocation(costs, alloc);
  ExtendedCost total;
  for (int j = 0; j < alloc.jobs(); ++j) {
    total += costs.at(alloc.machine_of_job[j], j);
    if (total.is_infinite()) return total;
  }
  return total;
}

AgentUtility utility(const CostMatrix& costs, const Mechanism& mech, int agent) {
  require_valid_allocation(costs, mech.allocation);
  if (mech.payments.size() != costs.machines()) {
    throw std::invalid_argument("payment vector length does not match machine count");
  }
  if (agent < 0 || agent >= costs.machines()) {
    throw std::out_of_range("agent index " + std::to_string(agent + 1) + " out of 1.." +
                            std::to_string(costs.machines()));
  }
  ExtendedCost load = compute_load(costs, mech.allocation, agent);
  if (load.is_infinite()) return {false, 0};
  return {true, mech.payments.values[agent] - load.finite()};
}

EnvyCheck is_envy_free(const CostMatrix& costs, const Mechanism& mech) {
  require_valid_allocation(costs, mech.allocation);
  if (mech.payments.size() != costs.machines()) {
    throw std::invalid_argument("payment vector length does not match machine count");
  }
  const int m = costs.machines();
  const auto bundles = bundles_by_machine(mech.allocation, m);
  std::vector<ExtendedCost> own_load(m);
  for (int i = 0; i < m; ++i) own_load[i] = bundle_cost(costs, i, bundles[i]);

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      ExtendedCost cross = bundle_cost(costs, i, bundles[j]);
      if (cross.is_infinite()) continue;  // right side is -inf, vacuous
      if (own_load[i].is_infinite()) {
        return {false, EnvyWitness{i, j}};  // -inf < finite
      }
      // p_i - c_i(B_i) >= p_j - c_i(B_j)
      if (mech.payments.values[i] + cross.finite() <
          mech.payments.values[j] + own_load[i].finite()) {
        return {false, EnvyWitness{i, j}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace efsched
