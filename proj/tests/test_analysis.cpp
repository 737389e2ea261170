// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "efsched/analysis.hpp"
#include "efsched/errors.hpp"
#include "efsched/generators.hpp"
#include "helpers.hpp"

using namespace efsched;
using namespace efsched::testing;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("cyclic shift") {
  SUBCASE("identity on the k=2 family") {
    const Allocation shifted = cyclic_shift(identity_alloc(3), 4);
    CHECK(shifted == alloc_1based({2, 3, 4}));
  }
  SUBCASE("empty allocation stays empty") {
    const Allocation shifted = cyclic_shift(Allocation{{}}, 4);
    CHECK(shifted.jobs() == 0);
  }
  SUBCASE("occupied last machine is an error") {
    CHECK_THROWS_AS(cyclic_shift(alloc_1based({1, 4}), 4), std::invalid_argument);
  }
}

TEST_CASE("shift cost delta") {
  SUBCASE("k=2 identity increases by 5/12") {
    const auto inst = family_instance(2);
    const ShiftDeltaReport report = shift_cost_delta(inst.costs, identity_alloc(3), inst.params);
    CHECK(report.total == q("5/12"));  // 41/12 - 3
    CHECK(report.low_machines_delta == q("-7/12"));
    CHECK(report.high_machines_delta == q("1"));
    CHECK(report.total == report.low_machines_delta + report.high_machines_delta);
  }
  SUBCASE("per-job decrease matches the column-difference identity at k=4") {
    const auto inst = family_instance(4);
    // job j sitting on machine j for j = 1..4 loses exactly 4/(2*(17-j))
    for (int j = 1; j <= 4; ++j) {
      Allocation single{std::vector<int>(5, -1)};
      // park the other jobs on their own machines, job j on machine j
      single = identity_alloc(5);
      const Rational before = inst.costs.at(j - 1, j - 1).finite();
      const Rational after = inst.costs.at(j, j - 1).finite();
      Rational expected(4, 2 * (17 - j));
      expected.canonicalize();
      CHECK(before - after == expected);
    }
    const ShiftDeltaReport report = shift_cost_delta(inst.costs, identity_alloc(5), inst.params);
    Rational low(0);
    for (int j = 1; j <= 4; ++j) {
      Rational step(4, 2 * (17 - j));
      step.canonicalize();
      low -= step;
    }
    CHECK(report.low_machines_delta == low);
  }
  SUBCASE("empty allocation has zero delta") {
    const auto inst = family_instance(2);
    const ShiftDeltaReport report = shift_cost_delta(inst.costs, Allocation{{}}, inst.params);
    CHECK(report.total == 0);
  }
  SUBCASE("consistency with total cost on random feasible allocations") {
    const auto inst = family_instance(4);
    std::mt19937_64 engine(51);
    int checked = 0;
    while (checked < 20) {
      Allocation alloc = random_allocation(inst.params.m - 1, inst.params.n, engine);
      if (total_allocation_cost(inst.costs, alloc).is_infinite()) continue;
      const Allocation shifted = cyclic_shift(alloc, inst.params.m);
      if (total_allocation_cost(inst.costs, shifted).is_infinite()) continue;
      const ShiftDeltaReport report = shift_cost_delta(inst.costs, alloc, inst.params);
      CHECK(ExtendedCost(total_allocation_cost(inst.costs, alloc).finite() + report.total) ==
            total_allocation_cost(inst.costs, shifted));
      ++checked;
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1).exact_value == q("1"));
  CHECK(harmonic(2).exact_value == q("3/2"));
  CHECK(harmonic(4).exact_value == q("25/12"));
  CHECK(harmonic(12).exact_value == q("86021/27720"));
  CHECK_THROWS_AS(harmonic(0), std::invalid_argument);

  SUBCASE("strictly increasing") {
    double previous = 0.0;
    for (std::uint64_t k = 1; k <= 200; ++k) {
      const HarmonicValue h = harmonic(k);
      CHECK(h.value > previous);
      previous = h.value;
    }
  }
  SUBCASE("exact and approximate branches agree at the switch point") {
    const HarmonicValue exact = harmonic(kHarmonicExactLimit);
    REQUIRE(exact.exact);
    // the approximation the >10^6 branch uses, evaluated at the switch point
    const double gamma = 0.57721566490153286060651209008240243;
    const double limit = static_cast<double>(kHarmonicExactLimit);
    const double approx = std::log(limit) + gamma + 1.0 / (2.0 * limit);
    CHECK(std::abs(approx - exact.value) / exact.value < 1e-6);
  }
}

TEST_CASE("proof accounting") {
  SUBCASE("k=4 is vacuous") {
    const AccountingReport report = proof_accounting(4);
    CHECK(report.l == 2);
    CHECK(report.increase_bound == q("20"));  // (2+3)*4
    REQUIRE(report.decrease_bound_exact.has_value());
    CHECK(*report.decrease_bound_exact == q("-28271/13860"));  // 2*(H_4 - H_12)
    CHECK(report.decrease_bound < 0.0);
    CHECK_FALSE(report.proof_binds);
  }
  SUBCASE("k=32 still falls short") {
    const AccountingReport report = proof_accounting(32);
    CHECK(report.increase_bound == q("256"));  // (5+3)*32
    CHECK(report.decrease_bound == doctest::Approx(226.326822).epsilon(1e-6));
    CHECK(report.gap < 0.0);
    CHECK_FALSE(report.proof_binds);
  }
  SUBCASE("k=64 binds") {
    const AccountingReport report = proof_accounting(64);
    CHECK(report.increase_bound == q("576"));  // (6+3)*64
    CHECK(report.decrease_bound == doctest::Approx(1118.158054).epsilon(1e-6));
    CHECK(report.gap > 0.0);
    CHECK(report.proof_binds);
  }
  SUBCASE("inadmissible exponents") {
    CHECK_THROWS_AS(proof_accounting(3), GuardError);
    CHECK_THROWS_AS(proof_accounting(0), GuardError);
  }
  SUBCASE("increase bound is exact for every admissible k") {
    for (int exponent = 0; exponent <= 10; ++exponent) {
      const int k = 1 << exponent;
      const AccountingReport report = proof_accounting(k);
      CHECK(report.increase_bound == Rational(static_cast<long>(exponent + 3) * k));
    }
  }
  SUBCASE("decrease bound grows once positive") {
    double previous = proof_accounting(64).decrease_bound;
    for (int k : {128, 256, 512, 1024}) {
      const double current = proof_accounting(k).decrease_bound;
      CHECK(current > previous);
      previous = current;
    }
  }
}

TEST_CASE("proof threshold is 64") {
  CHECK(proof_threshold() == 64);
  CHECK(proof_accounting(64).proof_binds);
  // minimality: no smaller admissible exponent binds
  for (int k : {1, 2, 4, 8, 16, 32}) {
    CHECK_FALSE(proof_accounting(k).proof_binds);
  }
}

TEST_CASE("job-count properties under a low makespan") {
  const auto inst = family_instance(4);  // l = 2, threshold 4

  SUBCASE("identity satisfies all three") {
    const JobCountReport report = job_count_check(inst.costs, identity_alloc(5), inst.params);
    CHECK(report.hypothesis_met);
    CHECK(report.property1_ok);
    CHECK(report.property2_ok);
    CHECK(report.property3_ok);
    CHECK(report.high_machine_total == 0);
    for (int count : report.jobs_per_machine) CHECK(count <= 1);
  }
  SUBCASE("load exactly 2^l reports hypothesis not met") {
    const Allocation alloc = alloc_1based({6, 6, 3, 4, 5});  // two jobs at cost 2 each
    const JobCountReport report = job_count_check(inst.costs, alloc, inst.params);
    CHECK(report.observed_makespan == cost("4"));
    CHECK_FALSE(report.hypothesis_met);
  }
  SUBCASE("1000 seeded random allocations below the threshold never violate") {
    std::mt19937_64 engine(52);
    int below = 0;
    int violations = 0;
    int produced = 0;
    while (produced < 1000) {
      const Allocation alloc = random_allocation(inst.params.m, inst.params.n, engine);
      ++produced;
      if (makespan(inst.costs, alloc) >= cost("4")) continue;
      ++below;
      const JobCountReport report = job_count_check(inst.costs, alloc, inst.params);
      REQUIRE(report.hypothesis_met);
      if (!(report.property1_ok && report.property2_ok && report.property3_ok)) ++violations;
    }
    CHECK(below > 0);
    CHECK(violations == 0);
  }
}

TEST_SUITE_END();
