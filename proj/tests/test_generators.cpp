// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "efsched/errors.hpp"
#include "efsched/generators.hpp"
#include "helpers.hpp"

using namespace efsched;
using namespace efsched::testing;

TEST_SUITE_BEGIN("generators");

TEST_CASE("derived parameters") {
  FamilyParams p = derive_family_params(4);
  CHECK(p.n_tilde == 16);
  CHECK(p.l == 2);
  CHECK(p.n == 5);
  CHECK(p.m == 7);

  p = derive_family_params(2);
  CHECK(p.n_tilde == 4);
  CHECK(p.l == 1);
  CHECK(p.n == 3);
  CHECK(p.m == 4);

  p = derive_family_params(1);
  CHECK(p.l == 0);
  CHECK(p.n == 3);
  CHECK(p.m == 3);

  CHECK_THROWS_AS(derive_family_params(3), GuardError);
  CHECK_THROWS_AS(derive_family_params(0), GuardError);
  CHECK_THROWS_AS(derive_family_params(-4), GuardError);
}

TEST_CASE("displayed entries of the k=4 instance") {
  const auto inst = family_instance(4);
  CHECK(inst.costs.at(1, 0) == cost("7/8"));   // 1 - 4/32
  CHECK(inst.costs.at(4, 0) == cost("1/2"));   // row n, column 1
  for (int j = 0; j < 5; ++j) {
    CHECK(inst.costs.at(j, j) == cost("1"));
    CHECK(inst.costs.at(5, j) == cost("2"));
    CHECK(inst.costs.at(6, j) == cost("4"));
  }
  CHECK(inst.costs.at(0, 1).is_infinite());
  CHECK(inst.costs.at(3, 4).is_infinite());
}

TEST_CASE("closed form at k=2") {
  const auto inst = family_instance(2);
  CHECK(inst.costs.at(2, 1) == cost("2/3"));  // 1 - 1*2/(2*3)
  CHECK(inst.costs.at(1, 0) == cost("3/4"));
  CHECK(inst.costs.at(2, 0) == cost("1/2"));
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(family_instance(16), GuardError);  // 4097 * 4109 entries > 10^7
  CHECK_THROWS_AS(family_instance(4, 10), GuardError);
  CHECK_NOTHROW(family_instance(4, 35));  // exactly m*n
}

TEST_CASE("validation accepts the generated family") {
  for (int k : {2, 4, 8}) {
    const auto inst = family_instance(k);
    const FamilyValidationReport report = validate_family_instance(inst.costs, inst.params);
    CHECK(report.ok);
    REQUIRE(report.half_equalities.size() == 1);
    CHECK(report.half_equalities.front() == CellRef{inst.params.n, 1});
  }
  // k=1 degenerates: with n_tilde = 2 both (3,1) and (3,2) sit at 1/2
  const auto tiny = family_instance(1);
  const FamilyValidationReport report = validate_family_instance(tiny.costs, tiny.params);
  CHECK(report.ok);
  REQUIRE(report.half_equalities.size() == 2);
  CHECK(report.half_equalities[0] == CellRef{3, 1});
  CHECK(report.half_equalities[1] == CellRef{3, 2});
}

TEST_CASE("validation difference identity at k=2") {
  const auto inst = family_instance(2);
  // c_{2,1} - c_{3,1} = 3/4 - 1/2 = 1/4 = 2/(2*4)
  CHECK(inst.costs.at(1, 0).finite() - inst.costs.at(2, 0).finite() == q("1/4"));
  CHECK(validate_family_instance(inst.costs, inst.params).bad_differences.empty());
}

TEST_CASE("validation flags a tampered diagonal") {
  const auto inst = family_instance(2);
  std::vector<ExtendedCost> entries;
  for (int i = 0; i < inst.params.m; ++i) {
    for (int j = 0; j < inst.params.n; ++j) entries.push_back(inst.costs.at(i, j));
  }
  entries[0] = cost("2");  // c_{1,1}
  CostMatrix tampered(inst.params.m, inst.params.n, std::move(entries));
  const FamilyValidationReport report = validate_family_instance(tampered, inst.params);
  CHECK_FALSE(report.ok);
  REQUIRE(report.bad_diagonal.size() == 1);
  CHECK(report.bad_diagonal.front() == CellRef{1, 1});
}

TEST_CASE("validation rejects mismatched dimensions") {
  const auto inst = family_instance(2);
  CHECK_THROWS_AS(validate_family_instance(inst.costs, derive_family_params(4)),
                  std::invalid_argument);
}

TEST_CASE("family dimensions and entry ranges") {
  for (int k : {1, 2, 4, 8}) {
    const auto inst = family_instance(k);
    const std::int64_t n_tilde = std::int64_t{1} << k;
    CHECK(inst.costs.jobs() == n_tilde / k + 1);
    CHECK(inst.costs.machines() == inst.costs.jobs() + inst.params.l);
    const int n = inst.params.n;

    for (int j = 1; j <= n; ++j) {
      if (j < n) {
        // nonincreasing down each column from the diagonal, constant step
        Rational step(inst.params.k, 2 * (n_tilde - j + 1));
        step.canonicalize();
        for (int i = j; i < n; ++i) {
          CHECK(inst.costs.at(i - 1, j - 1).finite() - inst.costs.at(i, j - 1).finite() == step);
        }
      }
      for (int i = 1; i <= n; ++i) {
        const ExtendedCost& entry = inst.costs.at(i - 1, j - 1);
        if (entry.is_finite()) {
          CHECK(entry.finite() >= q("1/2"));
          CHECK(entry.finite() <= q("1"));
        }
      }
    }
    for (int r = 1; r <= inst.params.l; ++r) {
      for (int j = 0; j < n; ++j) {
        CHECK(inst.costs.at(n + r - 1, j) == ExtendedCost(Rational(1 << r)));
      }
    }
  }
}

TEST_CASE("regeneration is identical") {
  const auto first = family_instance(4);
  const auto second = family_instance(4);
  for (int i = 0; i < first.params.m; ++i) {
    for (int j = 0; j < first.params.n; ++j) {
      CHECK(first.costs.at(i, j) == second.costs.at(i, j));
    }
  }
}

TEST_CASE("random instances") {
  SUBCASE("same seed, same matrix") {
    const CostMatrix a = random_instance(3, 3, 7, q("1"), q("2"), 0.0);
    const CostMatrix b = random_instance(3, 3, 7, q("1"), q("2"), 0.0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == b.at(i, j));
    }
  }
  SUBCASE("degenerate range pins every entry") {
    const CostMatrix a = random_instance(2, 4, 1, q("1"), q("1"), 0.0);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(a.at(i, j) == cost("1"));
    }
  }
  SUBCASE("every job stays runnable under heavy infinity") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const CostMatrix a = random_instance(3, 3, seed, q("1"), q("2"), 0.5);
      CHECK(a.every_job_runnable());
    }
  }
  SUBCASE("entries stay inside the range") {
    const CostMatrix a = random_instance(4, 4, 99, q("1/3"), q("5/2"), 0.0);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(a.at(i, j).finite() >= q("1/3"));
        CHECK(a.at(i, j).finite() <= q("5/2"));
      }
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(random_instance(2, 2, 1, q("2"), q("1"), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(2, 2, 1, q("0"), q("1"), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(0, 2, 1, q("0"), q("1"), 0.0), std::invalid_argument);
  }
}

TEST_SUITE_END();
