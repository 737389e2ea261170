// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include <variant>

#include "efsched/analysis.hpp"
#include "efsched/generators.hpp"
#include "efsched/payments.hpp"

using namespace efsched;

namespace {

void SynthesizePaymentsHardFamily(benchmark::State& state) {
  const auto inst = family_instance(static_cast<int>(state.range(0)));
  Allocation identity;
  for (int j = 0; j < inst.params.n; ++j) identity.machine_of_job.push_back(j);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_payments(inst.costs, identity));
  }
}

void SynthesizePaymentsRandom(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CostMatrix costs = random_instance(m, m, 31, Rational(1), Rational(4), 0.0);
  std::mt19937_64 engine(37);
  Allocation alloc;
  for (int j = 0; j < m; ++j) alloc.machine_of_job.push_back(static_cast<int>(engine() % m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_payments(costs, alloc));
  }
}

void HarmonicExact(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic(k));
  }
}

void FamilyInstanceGeneration(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_instance(k));
  }
}

}  // namespace

BENCHMARK(SynthesizePaymentsHardFamily)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(SynthesizePaymentsRandom)->DenseRange(4, 12, 4);
BENCHMARK(HarmonicExact)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(FamilyInstanceGeneration)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
