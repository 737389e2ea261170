// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "efsched/generators.hpp"
#include "efsched/search.hpp"

using namespace efsched;

namespace {

void OptMakespanHardFamily(benchmark::State& state) {
  const auto inst = family_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt_makespan(inst.costs));
  }
}

void MinEfMakespanHardFamily(benchmark::State& state) {
  const auto inst = family_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_ef_makespan(inst.costs));
  }
}

void MinEfMakespanRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CostMatrix costs = random_instance(6, n, 23, Rational(1), Rational(3), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_ef_makespan(costs));
  }
}

void MinEfMakespanThreads(benchmark::State& state) {
  const CostMatrix costs = random_instance(7, 8, 29, Rational(1), Rational(3), 0.1);
  SearchOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_ef_makespan(costs, options));
  }
}

void PartitionStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PartitionEnumerator stream(n, n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK(OptMakespanHardFamily)->Arg(2)->Arg(4);
BENCHMARK(MinEfMakespanHardFamily)->Arg(2)->Arg(4);
BENCHMARK(MinEfMakespanRandom)->DenseRange(4, 8, 2);
BENCHMARK(MinEfMakespanThreads)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(PartitionStream)->Arg(8)->Arg(10)->Arg(12);
