// SPDX-License-Identifier: Apache-2.0
#include "efsched/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "efsched/errors.hpp"

namespace efsched {

namespace {

bool is_power_of_two(std::int64_t v) {
  return v >= 1 && (v & (v - 1)) == 0;
}

int log2_exact(std::int64_t v) {
  int l = 0;
  while ((std::int64_t{1} << l) < v) ++l;
  return l;
}

}  // namespace

FamilyParams derive_family_params(int k) {
  if (!is_power_of_two(k)) {
    throw GuardError("k = " + std::to_string(k) +
                     " is not a power of two; the family needs integral log2(k)");
  }
  if (k > 62) throw GuardError("k = " + std::to_string(k) + " overflows the 2^k job budget");
  const std::int64_t n_tilde = std::int64_t{1} << k;
  const int l = log2_exact(k);
  const std::int64_t n = n_tilde / k + 1;
  const std::int64_t m = n + l;
  if (n > INT32_MAX || m > INT32_MAX) {
    throw GuardError("derived dimensions of k = " + std::to_string(k) + " are not representable");
  }
  return FamilyParams{k, n_tilde, l, static_cast<int>(n), static_cast<int>(m)};
}

FamilyInstance family_instance(int k, std::int64_t entry_cap) {
  const FamilyParams params = derive_family_params(k);
  const auto entries_needed =
      static_cast<std::int64_t>(params.m) * static_cast<std::int64_t>(params.n);
  if (entries_needed > entry_cap) {
    throw GuardError("instance for k = " + std::to_string(k) + " needs " +
                     std::to_string(entries_needed) + " entries, cap is " +
                     std::to_string(entry_cap));
  }

  std::vector<ExtendedCost> entries;
  entries.reserve(static_cast<std::size_t>(entries_needed));
  for (int i = 1; i <= params.m; ++i) {
    for (int j = 1; j <= params.n; ++j) {
      if (i <= params.n) {
        if (i == j) {
          entries.emplace_back(Rational(1));
        } else if (i > j) {
          // 1 - (i-j)*k / (2*(n_tilde - j + 1))
          const mpz_class numer = mpz_class(i - j) * params.k;
          const mpz_class denom = 2 * (mpz_class(params.n_tilde) - j + 1);
          Rational step(numer, denom);
          step.canonicalize();
          entries.emplace_back(Rational(1) - step);
        } else {
          entries.push_back(ExtendedCost::infinity());
        }
      } else {
        entries.emplace_back(Rational(std::int64_t{1} << (i - params.n)));
      }
    }
  }
  return FamilyInstance{CostMatrix(params.m, params.n, std::move(entries)), params};
}

FamilyValidationReport validate_family_instance(const CostMatrix& costs,
                                              const FamilyParams& params) {
  if (costs.machines() != params.m || costs.jobs() != params.n) {
    throw std::invalid_argument("matrix dimensions do not match the parameter block");
  }
  FamilyValidationReport report{};
  const Rational half = make_rational(1, 2);

  for (int i = 1; i <= params.m; ++i) {
    for (int j = 1; j <= params.n; ++j) {
      const ExtendedCost& entry = costs.at(i - 1, j - 1);
      if (i <= params.n && i < j) {
        if (entry.is_finite()) report.missing_infinities.push_back({i, j});
        continue;
      }
      if (entry.is_infinite()) {
        report.below_half.push_back({i, j});  // finite expected here
        continue;
      }
      if (entry.finite() < half) {
        report.below_half.push_back({i, j});
      } else if (entry.finite() == half) {
        report.half_equalities.push_back({i, j});
      }
      if (i == j && entry.finite() != 1) {
        report.bad_diagonal.push_back({i, j});
      }
    }
  }

  // c_{i,j} - c_{i+1,j} = k / (2*(n_tilde - j + 1)) for i < n, i > j
  for (int j = 1; j <= params.n; ++j) {
    if (j + 1 >= params.n) continue;  // no applicable row pairs in this column
    Rational expected(params.k, 2 * (params.n_tilde - j + 1));
    expected.canonicalize();
    for (int i = j + 1; i < params.n; ++i) {
      const ExtendedCost& upper = costs.at(i - 1, j - 1);
      const ExtendedCost& lower = costs.at(i, j - 1);
      if (upper.is_infinite() || lower.is_infinite() ||
          upper.finite() - lower.finite() != expected) {
        report.bad_differences.push_back({i, j});
      }
    }
  }

  report.ok = report.below_half.empty() && report.bad_differences.empty() &&
              report.bad_diagonal.empty() && report.missing_infinities.empty();
  return report;
}

CostMatrix random_instance(int machines, int jobs, std::uint64_t seed, const Rational& cost_lo,
                           const Rational& cost_hi, double inf_probability) {
  if (machines < 1 || jobs < 1) throw std::invalid_argument("need at least one machine and job");
  if (cost_lo > cost_hi) throw std::invalid_argument("empty cost range");
  if (cost_lo < 0) throw std::invalid_argument("costs must be nonnegative");
  if (inf_probability < 0.0 || inf_probability >= 1.0) {
    throw std::invalid_argument("infinity probability must lie in [0, 1)");
  }

  std::mt19937_64 engine(seed);
  const Rational width = cost_hi - cost_lo;
  // Raw engine words only; the standard distributions are not portable.
  auto draw_infinite = [&] {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53 < inf_probability;
  };
  auto draw_value = [&] {
    const unsigned long numer = engine() >> 32;
    Rational fraction(numer, 4294967296UL);  // 2^32
    fraction.canonicalize();
    return ExtendedCost(cost_lo + width * fraction);
  };

  std::vector<ExtendedCost> entries(static_cast<std::size_t>(machines) * jobs);
  for (int j = 0; j < jobs; ++j) {
    bool any_finite = false;
    while (!any_finite) {
      for (int i = 0; i < machines; ++i) {
        ExtendedCost entry = draw_infinite() ? ExtendedCost::infinity() : draw_value();
        any_finite = any_finite || entry.is_finite();
        entries[static_cast<std::size_t>(i) * jobs + j] = std::move(entry);
      }
    }
  }
  return CostMatrix(machines, jobs, std::move(entries));
}

}  // namespace efsched
