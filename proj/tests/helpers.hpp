// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_TESTS_HELPERS_HPP
#define EFSCHED_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "efsched/efficiency.hpp"
#include "efsched/generators.hpp"
#include "efsched/instance.hpp"
#include "efsched/rational.hpp"

namespace efsched::testing {

inline Rational q(const std::string& text) {
  return parse_rational(text);
}

inline ExtendedCost cost(const std::string& text) {
  if (text == "inf") return ExtendedCost::infinity();
  return ExtendedCost(parse_rational(text));
}

/// Row-major matrix from string tokens ("p/q", decimals, "inf").
inline CostMatrix matrix(int machines, int jobs, std::initializer_list<const char*> tokens) {
  std::vector<ExtendedCost> entries;
  entries.reserve(tokens.size());
  for (const char* token : tokens) entries.push_back(cost(token));
  return CostMatrix(machines, jobs, std::move(entries));
}

inline Allocation alloc_1based(std::initializer_list<int> machines) {
  Allocation alloc;
  for (int machine : machines) alloc.machine_of_job.push_back(machine - 1);
  return alloc;
}

inline Allocation identity_alloc(int jobs) {
  Allocation alloc;
  alloc.machine_of_job.resize(jobs);
  std::iota(alloc.machine_of_job.begin(), alloc.machine_of_job.end(), 0);
  return alloc;
}

// ---------------------------------------------------------------------------
// Independent oracles. These deliberately avoid the library's matching,
// enumeration and payment code paths; they recompute from first principles.

/// Minimum total cost over all injective bundle-to-machine placements,
/// by plain recursion over every placement. nullopt when every placement
/// is infinite.
inline std::optional<Rational> oracle_min_assignment_total(const CostMatrix& costs,
                                                           const Partition& partition) {
  const auto bundles = partition.bundles();
  const int b = static_cast<int>(bundles.size());
  const int m = costs.machines();
  std::optional<Rational> best;
  std::vector<char> used(m, 0);
  auto recurse = [&](auto&& self, int index, const Rational& sum) -> void {
    if (index == b) {
      if (!best || sum < *best) best = sum;
      return;
    }
    for (int machine = 0; machine < m; ++machine) {
      if (used[machine]) continue;
      ExtendedCost here = bundle_cost(costs, machine, bundles[index]);
      if (here.is_infinite()) continue;
      used[machine] = 1;
      self(self, index + 1, Rational(sum + here.finite()));
      used[machine] = 0;
    }
  };
  recurse(recurse, 0, Rational(0));
  return best;
}

/// All placements achieving the oracle minimum, lexicographic order.
inline std::vector<std::vector<int>> oracle_optimal_placements(const CostMatrix& costs,
                                                               const Partition& partition) {
  const auto bundles = partition.bundles();
  const int b = static_cast<int>(bundles.size());
  const int m = costs.machines();
  auto minimum = oracle_min_assignment_total(costs, partition);
  std::vector<std::vector<int>> result;
  if (!minimum) return result;
  std::vector<int> placement(b, -1);
  std::vector<char> used(m, 0);
  auto recurse = [&](auto&& self, int index, const Rational& sum) -> void {
    if (index == b) {
      if (sum == *minimum) result.push_back(placement);
      return;
    }
    for (int machine = 0; machine < m; ++machine) {
      if (used[machine]) continue;
      ExtendedCost here = bundle_cost(costs, machine, bundles[index]);
      if (here.is_infinite()) continue;
      used[machine] = 1;
      placement[index] = machine;
      self(self, index + 1, Rational(sum + here.finite()));
      placement[index] = -1;
      used[machine] = 0;
    }
  };
  recurse(recurse, 0, Rational(0));
  return result;
}

/// Local efficiency decided by trying every machine permutation.
inline bool oracle_locally_efficient(const CostMatrix& costs, const Allocation& alloc) {
  const int m = costs.machines();
  const auto bundles = bundles_by_machine(alloc, m);
  const ExtendedCost own = total_allocation_cost(costs, alloc);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ExtendedCost permuted;
    for (int i = 0; i < m && permuted.is_finite(); ++i) {
      permuted += bundle_cost(costs, i, bundles[perm[i]]);
    }
    if (permuted < own) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

/// Bell numbers via the Bell-triangle recurrence.
inline std::vector<std::uint64_t> oracle_bell_numbers(int up_to) {
  std::vector<std::uint64_t> bell{1};  // Bell(0)
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= up_to; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t value : row) next.push_back(next.back() + value);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Enumerates every allocation of n jobs to m machines (m^n of them) and
/// feeds each to the visitor.
template <typename Visitor>
void for_each_allocation(int machines, int jobs, Visitor&& visit) {
  Allocation alloc;
  alloc.machine_of_job.assign(jobs, 0);
  while (true) {
    visit(const_cast<const Allocation&>(alloc));
    int position = jobs - 1;
    while (position >= 0 && alloc.machine_of_job[position] == machines - 1) {
      alloc.machine_of_job[position] = 0;
      --position;
    }
    if (position < 0) return;
    ++alloc.machine_of_job[position];
  }
}

inline Allocation random_allocation(int machines, int jobs, std::mt19937_64& engine) {
  Allocation alloc;
  alloc.machine_of_job.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    alloc.machine_of_job.push_back(static_cast<int>(engine() % machines));
  }
  return alloc;
}

}  // namespace efsched::testing

#endif  // EFSCHED_TESTS_HELPERS_HPP
