// SPDX-License-Identifier: Apache-2.0
#include "efsched/search.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "efsched/errors.hpp"

namespace efsched {

PartitionEnumerator::PartitionEnumerator(int jobs, int max_bundles)
    : jobs_(jobs),
      max_bundles_(max_bundles),
      started_(false),
      exhausted_(false),
      rgs_(jobs, 0),
      prefix_max_(jobs, 0) {
  if (jobs < 1) throw std::invalid_argument("partition enumeration needs at least one job");
  if (max_bundles < 1) throw std::invalid_argument("need at least one bundle");
}

std::optional<Partition> PartitionEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(rgs_);  // all jobs in bundle 0
  }
  // Advance the restricted-growth string: rightmost position that can
  // still grow without breaking canonical form or the bundle cap.
  for (int j = jobs_ - 1; j >= 1; --j) {
    if (rgs_[j] <= prefix_max_[j - 1] && rgs_[j] + 1 < max_bundles_) {
      ++rgs_[j];
      prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j]);
      for (int t = j + 1; t < jobs_; ++t) {
        rgs_[t] = 0;
        prefix_max_[t] = prefix_max_[j];
      }
      return Partition(rgs_);
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

std::uint64_t count_partitions(int jobs, int max_bundles, std::uint64_t cap) {
  if (jobs < 1 || max_bundles < 1) return 0;
  // Stirling-style DP over (jobs placed, bundles used), saturating at cap+1.
  const int bundles = std::min(max_bundles, jobs);
  std::vector<std::uint64_t> count(bundles + 1, 0);
  count[0] = 1;  // zero jobs, zero bundles
  auto saturating = [&](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t sum = a + b;
    return (sum < a || sum > cap) ? cap + 1 : sum;
  };
  for (int placed = 1; placed <= jobs; ++placed) {
    for (int b = bundles; b >= 1; --b) {
      std::uint64_t reuse = count[b];
      if (reuse > cap / std::max(1, b)) {
        reuse = cap + 1;
      } else {
        reuse *= static_cast<std::uint64_t>(b);
      }
      count[b] = saturating(count[b - 1], reuse);
    }
    count[0] = 0;
  }
  std::uint64_t total = 0;
  for (int b = 1; b <= bundles; ++b) total = saturating(total, count[b]);
  return total;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > cap / base) return cap + 1;
    value *= base;
  }
  return value;
}

bool allocation_less(const Allocation& a, const Allocation& b) {
  return std::lexicographical_compare(a.machine_of_job.begin(), a.machine_of_job.end(),
                                      b.machine_of_job.begin(), b.machine_of_job.end());
}

struct Candidate {
  ExtendedCost makespan;
  Allocation allocation;

  bool better_than(const Candidate& other) const {
    if (makespan != other.makespan) return makespan < other.makespan;
    return allocation_less(allocation, other.allocation);
  }
};

}  // namespace

OptSearchResult opt_makespan(const CostMatrix& costs, const SearchOptions& options) {
  const int m = costs.machines();
  const int n = costs.jobs();
  const std::uint64_t maps = checked_power(static_cast<std::uint64_t>(m), n, options.map_guard);
  if (maps > options.map_guard) {
    throw GuardError("m^n = " + std::to_string(m) + "^" + std::to_string(n) +
                     " exceeds the map guard " + std::to_string(options.map_guard) +
                     "; note: the generated hard family attains its optimum on the identity "
                     "assignment");
  }

  std::vector<Rational> loads(m, Rational(0));
  Allocation current{std::vector<int>(n, -1)};
  std::optional<Candidate> best;
  std::uint64_t leaves = 0;

  auto descend = [&](auto&& self, int job, const ExtendedCost& partial_max) -> void {
    if (job == n) {
      ++leaves;
      Candidate candidate{partial_max, current};
      if (!best || candidate.better_than(*best)) best = std::move(candidate);
      return;
    }
    for (int machine = 0; machine < m; ++machine) {
      const ExtendedCost& entry = costs.at(machine, job);
      if (entry.is_infinite()) continue;
      ExtendedCost load_after = ExtendedCost(loads[machine] + entry.finite());
      ExtendedCost max_after = std::max(partial_max, load_after);
      if (best && max_after >= best->makespan) continue;  // cannot strictly improve
      Rational saved = loads[machine];
      loads[machine] += entry.finite();
      current.machine_of_job[job] = machine;
      self(self, job + 1, max_after);
      loads[machine] = std::move(saved);
      current.machine_of_job[job] = -1;
    }
  };
  descend(descend, 0, ExtendedCost());

  if (!best) {
    throw InfeasibleAssignmentError("some job cannot run on any machine");
  }
  return OptSearchResult{best->makespan, std::move(best->allocation), leaves};
}

namespace {

// Best (makespan, allocation) over every optimal placement of one partition.
std::optional<Candidate> best_candidate_of_partition(const CostMatrix& costs,
                                                     const Partition& partition,
                                                     int machine_cap) {
  std::vector<BundleAssignment> placements;
  try {
    placements = enumerate_optimal_assignments(costs, partition, machine_cap);
  } catch (const InfeasibleAssignmentError&) {
    return std::nullopt;  // no finite locally efficient placement here
  }
  const auto bundles = partition.bundles();
  std::optional<Candidate> best;
  for (const BundleAssignment& placement : placements) {
    Allocation alloc{std::vector<int>(partition.jobs(), -1)};
    for (int b = 0; b < partition.bundle_count(); ++b) {
      for (int job : bundles[b]) alloc.machine_of_job[job] = placement.machine_of_bundle[b];
    }
    Candidate candidate{makespan(costs, alloc), std::move(alloc)};
    if (!best || candidate.better_than(*best)) best = std::move(candidate);
  }
  return best;
}

}  // namespace

EfSearchResult min_ef_makespan(const CostMatrix& costs, const SearchOptions& options) {
  const int m = costs.machines();
  const int n = costs.jobs();
  if (m > options.machine_cap) {
    throw GuardError("machine count " + std::to_string(m) + " exceeds the cap " +
                     std::to_string(options.machine_cap));
  }
  if (n == 0) {
    PaymentVector zero;
    zero.values.assign(m, Rational(0));
    return EfSearchResult{ExtendedCost(), Allocation{{}}, std::move(zero), 0};
  }
  const int max_bundles = std::min(m, n);
  const std::uint64_t partitions = count_partitions(n, max_bundles, options.partition_guard);
  if (partitions > options.partition_guard) {
    throw GuardError("partition count for n = " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(options.partition_guard));
  }

  PartitionEnumerator enumerator(n, max_bundles);
  std::mutex enumerator_mutex;
  std::uint64_t examined = 0;
  const int workers = std::max(1, options.threads);
  std::vector<std::optional<Candidate>> worker_best(workers);

  auto work = [&](int id) {
    std::vector<Partition> chunk;
    while (true) {
      chunk.clear();
      {
        std::lock_guard<std::mutex> lock(enumerator_mutex);
        for (int i = 0; i < 64; ++i) {
          auto part = enumerator.next();
          if (!part) break;
          chunk.push_back(std::move(*part));
          ++examined;
        }
      }
      if (chunk.empty()) return;
      for (const Partition& partition : chunk) {
        auto candidate = best_candidate_of_partition(costs, partition, options.machine_cap);
        if (candidate && (!worker_best[id] || candidate->better_than(*worker_best[id]))) {
          worker_best[id] = std::move(candidate);
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& thread : pool) thread.join();
  }

  // Exact-min reduction; the candidate order is total, so the merge result
  // is independent of how partitions were distributed.
  std::optional<Candidate> best;
  for (auto& local : worker_best) {
    if (local && (!best || local->better_than(*best))) best = std::move(local);
  }
  if (!best) {
    throw InfeasibleAssignmentError("no partition admits a finite locally efficient placement");
  }

  PaymentOutcome payments = synthesize_payments(costs, best->allocation);
  auto* vector = std::get_if<PaymentVector>(&payments);
  if (vector == nullptr) {
    throw std::logic_error("optimal placement rejected by payment synthesis");
  }
  return EfSearchResult{best->makespan, std::move(best->allocation), std::move(*vector),
                        examined};
}

SearchResult ef_gap_report(const CostMatrix& costs, const SearchOptions& options) {
  OptSearchResult opt = opt_makespan(costs, options);
  EfSearchResult ef = min_ef_makespan(costs, options);

  std::optional<Rational> ratio;
  if (opt.makespan.is_finite() && ef.makespan.is_finite()) {
    if (opt.makespan.finite() > 0) {
      ratio = ef.makespan.finite() / opt.makespan.finite();
    } else {
      ratio = Rational(1);  // both optima are zero
    }
  }
  return SearchResult{opt.makespan,         std::move(opt.allocation), ef.makespan,
                      std::move(ef.allocation), std::move(ef.payments), std::move(ratio),
                      ef.partitions_examined};
}

}  // namespace efsched
