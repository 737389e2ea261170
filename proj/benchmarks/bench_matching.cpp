// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "efsched/efficiency.hpp"
#include "efsched/generators.hpp"

using namespace efsched;

namespace {

Partition random_partition(int jobs, std::uint64_t seed) {
  std::vector<int> rgs(jobs, 0);
  std::mt19937_64 engine(seed);
  int max_seen = 0;
  for (int j = 1; j < jobs; ++j) {
    rgs[j] = static_cast<int>(engine() % (max_seen + 2));
    if (rgs[j] > max_seen) max_seen = rgs[j];
  }
  return Partition(rgs);
}

void MinCostAssignmentRandom(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CostMatrix costs = random_instance(m, m - 1, 7, Rational(1), Rational(4), 0.1);
  const Partition partition = random_partition(m - 1, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_assignment(costs, partition));
  }
}

void MinCostAssignmentHardFamily(benchmark::State& state) {
  const auto inst = family_instance(static_cast<int>(state.range(0)));
  const Partition partition = Partition::singletons(inst.params.n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_assignment(inst.costs, partition));
  }
}

void EnumerateOptimalAssignments(benchmark::State& state) {
  const auto inst = family_instance(4);
  const Partition partition = Partition::singletons(inst.params.n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_optimal_assignments(inst.costs, partition));
  }
}

}  // namespace

BENCHMARK(MinCostAssignmentRandom)->DenseRange(4, 10, 2);
BENCHMARK(MinCostAssignmentHardFamily)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(EnumerateOptimalAssignments);
