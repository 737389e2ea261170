// SPDX-License-Identifier: Apache-2.0
#include "efsched/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "efsched/errors.hpp"

namespace efsched {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

Rational harmonic_exact_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo == hi) return Rational(1UL, static_cast<unsigned long>(lo));
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return harmonic_exact_range(lo, mid) + harmonic_exact_range(mid + 1, hi);
}

double harmonic_approx(std::uint64_t k) {
  const double kd = static_cast<double>(k);
  return std::log(kd) + kEulerGamma + 1.0 / (2.0 * kd);
}

bool is_power_of_two_int(int v) {
  return v >= 1 && (v & (v - 1)) == 0;
}

}  // namespace

Allocation cyclic_shift(const Allocation& alloc, int machines) {
  if (machines < 1) throw std::invalid_argument("need at least one machine");
  if (!alloc.valid_for(machines)) {
    throw std::invalid_argument("allocation assigns a machine out of range");
  }
  Allocation shifted = alloc;
  for (int j = 0; j < alloc.jobs(); ++j) {
    if (alloc.machine_of_job[j] == machines - 1) {
      throw std::invalid_argument("cyclic shift needs the last machine empty; job " +
                                  std::to_string(j + 1) + " is assigned to it");
    }
    shifted.machine_of_job[j] = alloc.machine_of_job[j] + 1;
  }
  return shifted;
}

ShiftDeltaReport shift_cost_delta(const CostMatrix& costs, const Allocation& alloc,
                                  const FamilyParams& params) {
  if (costs.machines() != params.m || costs.jobs() != params.n) {
    throw std::invalid_argument("matrix dimensions do not match the parameter block");
  }
  ShiftDeltaReport report{Rational(0), Rational(0), Rational(0)};
  if (alloc.jobs() == 0) return report;  // degenerate: nothing moves

  static_cast<void>(cyclic_shift(alloc, params.m));  // applicability guard
  for (int j = 0; j < alloc.jobs(); ++j) {
    const int from = alloc.machine_of_job[j];
    const ExtendedCost& before = costs.at(from, j);
    const ExtendedCost& after = costs.at(from + 1, j);
    if (before.is_infinite() || after.is_infinite()) {
      throw std::invalid_argument("shift delta undefined: job " + std::to_string(j + 1) +
                                  " has infinite cost on machine " + std::to_string(from + 1) +
                                  " or " + std::to_string(from + 2));
    }
    const Rational delta = after.finite() - before.finite();
    if (from + 1 < params.n) {  // 1-based machines 1..n-1
      report.low_machines_delta += delta;
    } else {
      report.high_machines_delta += delta;
    }
    report.total += delta;
  }
  return report;
}

HarmonicValue harmonic(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("harmonic numbers start at k = 1");
  if (k <= kHarmonicExactLimit) {
    Rational exact = harmonic_exact_range(1, k);
    const double value = to_double(exact);
    return HarmonicValue{true, std::move(exact), value};
  }
  return HarmonicValue{false, Rational(0), harmonic_approx(k)};
}

AccountingReport proof_accounting(int k) {
  if (!is_power_of_two_int(k)) {
    throw GuardError("k = " + std::to_string(k) + " is not admissible (must be a power of two)");
  }
  AccountingReport report{};
  report.k = k;
  int l = 0;
  while ((1 << l) < k) ++l;
  report.l = l;
  report.increase_bound = Rational(static_cast<long>(l + 3) * k);  // (l+3) * 2^l, 2^l = k

  // High argument: n_tilde / log2(n_tilde) = 2^k / k.
  double high_value = 0.0;
  Rational high_exact(0);
  bool high_is_exact = false;
  if (k <= 63) {
    const std::uint64_t high_arg = (std::uint64_t{1} << k) / static_cast<std::uint64_t>(k);
    HarmonicValue high = harmonic(high_arg);
    high_value = high.value;
    high_is_exact = high.exact;
    if (high.exact) high_exact = high.exact_value;
  } else {
    // ln(2^k / k) = k ln 2 - ln k; the 1/(2x) term is far below double noise.
    high_value = static_cast<double>(k) * std::log(2.0) - std::log(static_cast<double>(k)) +
                 kEulerGamma;
  }

  HarmonicValue low = harmonic(static_cast<std::uint64_t>(3) * k);  // H_{3 * 2^l}
  report.high_harmonic_exact = high_is_exact;
  report.low_harmonic_exact = low.exact;

  const double half_log = static_cast<double>(k) / 2.0;
  report.decrease_bound = half_log * (high_value - low.value);
  if (high_is_exact && low.exact) {
    Rational exact = Rational(k, 2) * (high_exact - low.exact_value);
    exact.canonicalize();
    report.decrease_bound_exact = exact;
    report.decrease_bound = to_double(exact);
  }
  report.log_formula_decrease =
      half_log * (k * std::log(2.0) - std::log(static_cast<double>(k)) -
                  std::log(3.0 * static_cast<double>(k)));
  report.gap = report.decrease_bound - to_double(report.increase_bound);
  report.proof_binds = report.gap > 0.0;
  return report;
}

int proof_threshold() {
  for (int exponent = 0; exponent <= 20; ++exponent) {
    const int k = 1 << exponent;
    if (proof_accounting(k).proof_binds) return k;
  }
  throw std::logic_error("no admissible k up to 2^20 makes the accounting bind");
}

JobCountReport job_count_check(const CostMatrix& costs, const Allocation& alloc,
                          const FamilyParams& params) {
  if (costs.machines() != params.m || costs.jobs() != params.n) {
    throw std::invalid_argument("matrix dimensions do not match the parameter block");
  }
  JobCountReport report{};
  report.observed_makespan = makespan(costs, alloc);
  report.threshold = Rational(std::int64_t{1} << params.l);
  report.hypothesis_met = report.observed_makespan < ExtendedCost(report.threshold);
  report.jobs_per_machine.assign(params.m, 0);
  for (int machine : alloc.machine_of_job) ++report.jobs_per_machine[machine];
  report.high_machine_total = 0;
  for (int i = params.n; i < params.m; ++i) {
    report.high_machine_total += report.jobs_per_machine[i];
  }
  report.property1_ok = report.property2_ok = report.property3_ok = true;
  if (!report.hypothesis_met) return report;  // nothing asserted

  const int per_machine_limit = 1 << (params.l + 1);  // 2^(l+1)
  for (int i = 0; i < params.m; ++i) {
    if (report.jobs_per_machine[i] < per_machine_limit) continue;
    bool holds_job1 = alloc.jobs() > 0 && alloc.machine_of_job[0] == params.n - 1;
    if (i == params.n - 1 && report.jobs_per_machine[i] == per_machine_limit && holds_job1) {
      // The one cost entry equal to 1/2 sits at (n, 1); a bundle of exactly
      // 2^(l+1) jobs there is the non-strict borderline.
      report.property1_flagged.push_back(i + 1);
    } else {
      report.property1_ok = false;
      report.property1_violations.push_back(i + 1);
    }
  }
  for (int i = params.n; i < params.m; ++i) {
    const int offset = i + 1 - params.n;         // machine index minus n, 1-based
    const int limit = 1 << (params.l - offset);  // 2^l / 2^(i-n)
    if (report.jobs_per_machine[i] >= limit) {
      report.property2_ok = false;
      report.property2_violations.push_back(i + 1);
    }
  }
  report.property3_ok = report.high_machine_total < (1 << params.l);
  return report;
}

}  // namespace efsched
