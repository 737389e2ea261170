// SPDX-License-Identifier: Apache-2.0
#include "efsched/efficiency.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "efsched/errors.hpp"

namespace efsched {

namespace {

// Signed extended value for matching internals; entries themselves are
// nonnegative but reduced costs are not.
struct ExtValue {
  bool inf = true;
  Rational v;

  static ExtValue finite(Rational value) { return {false, std::move(value)}; }
};

bool ext_less(const ExtValue& a, const ExtValue& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  return a.v < b.v;
}

struct MatchResult {
  Rational total;
  std::vector<int> machine_of_bundle;  // indices into the column subset
};

// Jonker-Volgenant style row-by-row augmentation with exact rational
// potentials. Infinite entries are excluded edges, not sentinels. Returns
// nullopt when no finite-cost perfect matching of the rows exists.
std::optional<MatchResult> solve_assignment(const std::vector<std::vector<ExtendedCost>>& table,
                                            const std::vector<int>& rows,
                                            const std::vector<int>& cols) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(cols.size());
  if (r == 0) return MatchResult{Rational(0), {}};
  if (r > c) return std::nullopt;

  std::vector<Rational> u(r + 1, Rational(0)), v(c + 1, Rational(0));
  std::vector<int> matched_row(c + 1, 0);  // 1-based; 0 = free column
  std::vector<int> way(c + 1, 0);

  for (int i = 1; i <= r; ++i) {
    matched_row[0] = i;
    int j0 = 0;
    std::vector<ExtValue> minv(c + 1);
    std::vector<char> used(c + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = matched_row[j0];
      int j1 = -1;
      ExtValue delta;
      for (int j = 1; j <= c; ++j) {
        if (used[j]) continue;
        const ExtendedCost& entry = table[rows[i0 - 1]][cols[j - 1]];
        if (entry.is_finite()) {
          ExtValue cur = ExtValue::finite(entry.finite() - u[i0] - v[j]);
          if (ext_less(cur, minv[j])) {
            minv[j] = std::move(cur);
            way[j] = j0;
          }
        }
        if (ext_less(minv[j], delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (delta.inf) return std::nullopt;  // no augmenting path of finite cost
      for (int j = 0; j <= c; ++j) {
        if (used[j]) {
          u[matched_row[j]] += delta.v;
          v[j] -= delta.v;
        } else if (!minv[j].inf) {
          minv[j].v -= delta.v;
        }
      }
      j0 = j1;
    } while (matched_row[j0] != 0);
    do {
      const int j1 = way[j0];
      matched_row[j0] = matched_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  MatchResult result;
  result.machine_of_bundle.assign(r, -1);
  result.total = 0;
  for (int j = 1; j <= c; ++j) {
    if (matched_row[j] != 0) {
      result.machine_of_bundle[matched_row[j] - 1] = j - 1;
      result.total += table[rows[matched_row[j] - 1]][cols[j - 1]].finite();
    }
  }
  return result;
}

std::optional<Rational> min_total(const std::vector<std::vector<ExtendedCost>>& table,
                                  const std::vector<int>& rows, const std::vector<int>& cols) {
  auto solved = solve_assignment(table, rows, cols);
  if (!solved) return std::nullopt;
  return solved->total;
}

std::vector<int> iota_vector(int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  return ids;
}

}  // namespace

Partition::Partition(std::vector<int> restricted_growth)
    : bundle_of_job_(std::move(restricted_growth)), bundle_count_(0) {
  int max_seen = -1;
  for (std::size_t j = 0; j < bundle_of_job_.size(); ++j) {
    const int b = bundle_of_job_[j];
    if (b < 0 || b > max_seen + 1) {
      throw std::invalid_argument("bundle ids are not in restricted-growth form at job " +
                                  std::to_string(j + 1));
    }
    max_seen = std::max(max_seen, b);
  }
  bundle_count_ = max_seen + 1;
}

Partition Partition::singletons(int jobs) {
  return Partition(iota_vector(jobs));
}

std::vector<std::vector<int>> Partition::bundles() const {
  std::vector<std::vector<int>> result(bundle_count_);
  for (int j = 0; j < jobs(); ++j) result[bundle_of_job_[j]].push_back(j);
  return result;
}

std::pair<Partition, std::vector<int>> induced_partition(const Allocation& alloc) {
  std::vector<int> rgs(alloc.jobs());
  std::vector<int> machine_of_bundle;
  for (int j = 0; j < alloc.jobs(); ++j) {
    const int machine = alloc.machine_of_job[j];
    int bundle = -1;
    for (std::size_t b = 0; b < machine_of_bundle.size(); ++b) {
      if (machine_of_bundle[b] == machine) {
        bundle = static_cast<int>(b);
        break;
      }
    }
    if (bundle < 0) {
      bundle = static_cast<int>(machine_of_bundle.size());
      machine_of_bundle.push_back(machine);
    }
    rgs[j] = bundle;
  }
  return {Partition(std::move(rgs)), std::move(machine_of_bundle)};
}

std::vector<std::vector<ExtendedCost>> bundle_cost_table(const CostMatrix& costs,
                                                         const Partition& partition) {
  if (partition.jobs() != costs.jobs()) {
    throw std::invalid_argument("partition covers " + std::to_string(partition.jobs()) +
                                " jobs, instance has " + std::to_string(costs.jobs()));
  }
  if (partition.bundle_count() > costs.machines()) {
    throw std::invalid_argument("more bundles than machines");
  }
  const auto bundles = partition.bundles();
  std::vector<std::vector<ExtendedCost>> table(bundles.size());
  for (std::size_t b = 0; b < bundles.size(); ++b) {
    table[b].reserve(costs.machines());
    for (int i = 0; i < costs.machines(); ++i) {
      table[b].push_back(bundle_cost(costs, i, bundles[b]));
    }
  }
  return table;
}

BundleAssignment min_cost_assignment(const CostMatrix& costs, const Partition& partition) {
  const auto table = bundle_cost_table(costs, partition);
  const int b = partition.bundle_count();
  const int m = costs.machines();
  if (b == 0) return BundleAssignment{{}, ExtendedCost()};

  const auto all_rows = iota_vector(b);
  auto optimum = min_total(table, all_rows, iota_vector(m));
  if (!optimum) {
    throw InfeasibleAssignmentError("every bundle placement has infinite total cost");
  }

  // Fix bundles one by one to the smallest machine that still reaches the
  // optimum; yields the lexicographically smallest optimal vector.
  std::vector<int> machine_of_bundle(b, -1);
  std::vector<char> machine_used(m, 0);
  Rational prefix(0);
  for (int q = 0; q < b; ++q) {
    std::vector<int> tail_rows;
    for (int r = q + 1; r < b; ++r) tail_rows.push_back(r);
    bool fixed = false;
    for (int machine = 0; machine < m && !fixed; ++machine) {
      if (machine_used[machine] || table[q][machine].is_infinite()) continue;
      std::vector<int> tail_cols;
      for (int col = 0; col < m; ++col) {
        if (!machine_used[col] && col != machine) tail_cols.push_back(col);
      }
      auto rest = min_total(table, tail_rows, tail_cols);
      if (rest && prefix + table[q][machine].finite() + *rest == *optimum) {
        machine_of_bundle[q] = machine;
        machine_used[machine] = 1;
        prefix += table[q][machine].finite();
        fixed = true;
      }
    }
    if (!fixed) throw std::logic_error("lexicographic refinement lost the optimum");
  }
  return BundleAssignment{std::move(machine_of_bundle), ExtendedCost(*optimum)};
}

LocalEfficiencyCheck is_locally_efficient(const CostMatrix& costs, const Allocation& alloc) {
  const ExtendedCost own_total = total_allocation_cost(costs, alloc);
  auto [partition, holder_of_bundle] = induced_partition(alloc);
  const auto table = bundle_cost_table(costs, partition);
  const int m = costs.machines();

  auto optimum = min_total(table, iota_vector(partition.bundle_count()), iota_vector(m));
  if (!optimum) {
    // Every placement, including the current one, is infinite.
    return {true, own_total, ExtendedCost::infinity(), std::nullopt};
  }
  const ExtendedCost minimum = ExtendedCost(*optimum);
  if (own_total == minimum) {
    return {true, own_total, minimum, std::nullopt};
  }

  // Build the improving permutation from the optimal placement: the machine
  // that receives bundle q takes it from its current holder; leftover
  // machines exchange empty bundles in ascending order.
  const BundleAssignment best = min_cost_assignment(costs, partition);
  std::vector<int> permutation(m, -1);
  std::vector<char> source_taken(m, 0);
  for (int q = 0; q < partition.bundle_count(); ++q) {
    permutation[best.machine_of_bundle[q]] = holder_of_bundle[q];
    source_taken[holder_of_bundle[q]] = 1;
  }
  std::vector<int> free_sources;
  for (int i = 0; i < m; ++i) {
    if (!source_taken[i]) free_sources.push_back(i);
  }
  std::size_t next_free = 0;
  for (int i = 0; i < m; ++i) {
    if (permutation[i] < 0) permutation[i] = free_sources[next_free++];
  }
  return {false, own_total, minimum, std::move(permutation)};
}

std::vector<BundleAssignment> enumerate_optimal_assignments(const CostMatrix& costs,
                                                            const Partition& partition,
                                                            int machine_cap) {
  const int m = costs.machines();
  if (m > machine_cap) {
    throw GuardError("machine count " + std::to_string(m) + " exceeds the enumeration cap " +
                     std::to_string(machine_cap));
  }
  const auto table = bundle_cost_table(costs, partition);
  const int b = partition.bundle_count();
  if (b == 0) return {BundleAssignment{{}, ExtendedCost()}};

  auto optimum = min_total(table, iota_vector(b), iota_vector(m));
  if (!optimum) {
    throw InfeasibleAssignmentError("every bundle placement has infinite total cost");
  }

  std::vector<BundleAssignment> result;
  std::vector<int> placement(b, -1);
  std::vector<char> used(m, 0);
  auto descend = [&](auto&& self, int q, const Rational& partial) -> void {
    if (q == b) {
      if (partial == *optimum) result.push_back({placement, ExtendedCost(partial)});
      return;
    }
    for (int machine = 0; machine < m; ++machine) {
      if (used[machine] || table[q][machine].is_infinite()) continue;
      Rational next = partial + table[q][machine].finite();
      if (next > *optimum) continue;
      placement[q] = machine;
      used[machine] = 1;
      self(self, q + 1, next);
      used[machine] = 0;
      placement[q] = -1;
    }
  };
  descend(descend, 0, Rational(0));
  return result;
}

ExtendedCost permuted_total_cost(const CostMatrix& costs, const Allocation& alloc,
                                 const std::vector<int>& permutation) {
  const int m = costs.machines();
  if (static_cast<int>(permutation.size()) != m) {
    throw std::invalid_argument("permutation length does not match machine count");
  }
  std::vector<char> seen(m, 0);
  for (int source : permutation) {
    if (source < 0 || source >= m || seen[source]) {
      throw std::invalid_argument("not a permutation of the machines");
    }
    seen[source] = 1;
  }
  const auto bundles = bundles_by_machine(alloc, m);
  ExtendedCost total;
  for (int i = 0; i < m; ++i) {
    total += bundle_cost(costs, i, bundles[permutation[i]]);
    if (total.is_infinite()) return total;
  }
  return total;
}

bool improves_total_cost(const CostMatrix& costs, const Allocation& alloc,
                         const std::vector<int>& permutation) {
  return permuted_total_cost(costs, alloc, permutation) < total_allocation_cost(costs, alloc);
}

}  // namespace efsched
