// SPDX-License-Identifier: Apache-2.0
#include "efsched/io.hpp"

#include <json.hpp>

#include <string>
#include <utility>

#include "efsched/errors.hpp"

namespace efsched {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& document) {
  return document.dump(2) + "\n";
}

Json parse_document(const std::string& text) {
  Json document = Json::parse(text, nullptr, false);
  if (document.is_discarded()) throw ParseError("input is not valid JSON");
  return document;
}

int require_int(const Json& document, const char* key) {
  if (!document.contains(key) || !document[key].is_number_integer()) {
    throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
  }
  return document[key].get<int>();
}

ExtendedCost parse_cost_entry(const Json& value, int row, int column) {
  const std::string where =
      "row " + std::to_string(row) + ", column " + std::to_string(column);
  if (value.is_number_integer()) {
    const auto raw = value.get<long>();
    if (raw < 0) throw ParseError("negative cost at " + where);
    return ExtendedCost(Rational(raw));
  }
  if (!value.is_string()) {
    throw ParseError("cost at " + where + " must be a string or integer (floats lose exactness)");
  }
  const std::string token = value.get<std::string>();
  if (token == "inf") return ExtendedCost::infinity();
  Rational parsed;
  try {
    parsed = parse_rational(token);
  } catch (const ParseError& error) {
    throw ParseError(std::string(error.what()) + " at " + where);
  }
  if (parsed < 0) throw ParseError("negative cost at " + where);
  return ExtendedCost(std::move(parsed));
}

Rational parse_payment_entry(const Json& value, int index) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) {
    throw ParseError("payment " + std::to_string(index) +
                     " must be a string or integer (floats lose exactness)");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& error) {
    throw ParseError(std::string(error.what()) + " in payment " + std::to_string(index));
  }
}

Json cell_list(const std::vector<CellRef>& cells) {
  Json list = Json::array();
  for (const CellRef& cell : cells) list.push_back(Json::array({cell.machine, cell.job}));
  return list;
}

Json allocation_field(const Allocation& alloc) {
  Json list = Json::array();
  for (int machine : alloc.machine_of_job) list.push_back(machine + 1);
  return list;
}

Json payments_field(const PaymentVector& payments) {
  Json list = Json::array();
  for (const Rational& p : payments.values) list.push_back(to_fraction_string(p));
  return list;
}

Allocation parse_assignment_field(const Json& document, int machines, int jobs) {
  if (!document.contains("assignment") || !document["assignment"].is_array()) {
    throw ParseError("missing \"assignment\" array");
  }
  const Json& raw = document["assignment"];
  if (static_cast<int>(raw.size()) != jobs) {
    throw ParseError("assignment lists " + std::to_string(raw.size()) + " jobs, instance has " +
                     std::to_string(jobs));
  }
  Allocation alloc;
  alloc.machine_of_job.reserve(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!raw[j].is_number_integer()) {
      throw ParseError("assignment entry " + std::to_string(j + 1) + " is not an integer");
    }
    const int machine = raw[j].get<int>();
    if (machine < 1 || machine > machines) {
      throw ParseError("assignment entry " + std::to_string(j + 1) + ": machine " +
                       std::to_string(machine) + " out of 1.." + std::to_string(machines));
    }
    alloc.machine_of_job.push_back(machine - 1);
  }
  return alloc;
}

}  // namespace

InstanceDocument parse_instance_json(const std::string& text) {
  const Json document = parse_document(text);
  const int machines = require_int(document, "m");
  const int jobs = require_int(document, "n");
  if (machines < 1) throw ParseError("m must be at least 1");
  if (jobs < 0) throw ParseError("n must be nonnegative");
  if (!document.contains("costs") || !document["costs"].is_array()) {
    throw ParseError("missing \"costs\" array");
  }
  const Json& rows = document["costs"];
  if (static_cast<int>(rows.size()) != machines) {
    throw ParseError("costs has " + std::to_string(rows.size()) + " rows, expected m = " +
                     std::to_string(machines));
  }
  std::vector<ExtendedCost> entries;
  entries.reserve(static_cast<std::size_t>(machines) * jobs);
  for (int i = 0; i < machines; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != jobs) {
      throw ParseError("costs row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.is_array() ? row.size() : 0) + " entries, expected n = " +
                       std::to_string(jobs));
    }
    for (int j = 0; j < jobs; ++j) {
      entries.push_back(parse_cost_entry(row[j], i + 1, j + 1));
    }
  }
  CostMatrix costs(machines, jobs, std::move(entries));
  for (int j = 0; j < jobs; ++j) {
    bool finite = false;
    for (int i = 0; i < machines && !finite; ++i) finite = costs.at(i, j).is_finite();
    if (!finite) {
      throw ParseError("job " + std::to_string(j + 1) +
                       " has infinite cost on every machine; the instance is infeasible");
    }
  }

  std::optional<FamilyParams> params;
  if (document.contains("params")) {
    const Json& block = document["params"];
    FamilyParams parsed{};
    parsed.k = require_int(block, "k");
    if (!block.contains("n_tilde") || !block["n_tilde"].is_number_integer()) {
      throw ParseError("missing or non-integer field \"n_tilde\"");
    }
    parsed.n_tilde = block["n_tilde"].get<std::int64_t>();
    parsed.l = require_int(block, "l");
    parsed.n = require_int(block, "n");
    parsed.m = require_int(block, "m");
    const FamilyParams derived = derive_family_params(parsed.k);
    if (!(derived == parsed)) {
      throw ParseError("params block is inconsistent with k = " + std::to_string(parsed.k));
    }
    params = parsed;
  }
  return InstanceDocument{std::move(costs), params};
}

Allocation parse_allocation_json(const std::string& text, int machines, int jobs) {
  return parse_assignment_field(parse_document(text), machines, jobs);
}

Mechanism parse_mechanism_json(const std::string& text, int machines, int jobs) {
  const Json document = parse_document(text);
  Mechanism mech;
  mech.allocation = parse_assignment_field(document, machines, jobs);
  if (!document.contains("payments") || !document["payments"].is_array()) {
    throw ParseError("missing \"payments\" array");
  }
  const Json& raw = document["payments"];
  if (static_cast<int>(raw.size()) != machines) {
    throw ParseError("payments lists " + std::to_string(raw.size()) + " machines, instance has " +
                     std::to_string(machines));
  }
  mech.payments.values.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    mech.payments.values.push_back(parse_payment_entry(raw[i], static_cast<int>(i) + 1));
  }
  return mech;
}

std::string instance_to_json(const CostMatrix& costs, const std::optional<FamilyParams>& params) {
  Json document;
  document["m"] = costs.machines();
  document["n"] = costs.jobs();
  Json rows = Json::array();
  for (int i = 0; i < costs.machines(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < costs.jobs(); ++j) row.push_back(to_string(costs.at(i, j)));
    rows.push_back(std::move(row));
  }
  document["costs"] = std::move(rows);
  if (params) {
    document["params"] = Json{{"k", params->k},
                              {"n_tilde", params->n_tilde},
                              {"l", params->l},
                              {"n", params->n},
                              {"m", params->m}};
  }
  return dump(document);
}

std::string instance_to_csv(const CostMatrix& costs) {
  std::string out;
  for (int i = 0; i < costs.machines(); ++i) {
    for (int j = 0; j < costs.jobs(); ++j) {
      if (j > 0) out += ',';
      out += to_string(costs.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string allocation_to_json(const Allocation& alloc) {
  Json document;
  document["assignment"] = allocation_field(alloc);
  return dump(document);
}

std::string mechanism_to_json(const Mechanism& mech) {
  Json document;
  document["assignment"] = allocation_field(mech.allocation);
  document["payments"] = payments_field(mech.payments);
  return dump(document);
}

std::string envy_check_to_json(const EnvyCheck& check) {
  Json document;
  document["envy_free"] = check.envy_free;
  if (check.witness) {
    document["witness"] = Json{{"envious", check.witness->envious + 1},
                               {"envied", check.witness->envied + 1}};
  }
  return dump(document);
}

std::string local_efficiency_to_json(const LocalEfficiencyCheck& check) {
  Json document;
  document["locally_efficient"] = check.locally_efficient;
  if (!check.locally_efficient) {
    document["allocation_cost"] = to_string(check.allocation_cost);
    document["minimum_cost"] = to_string(check.minimum_cost);
    Json permutation = Json::array();
    for (int source : *check.improving_permutation) permutation.push_back(source + 1);
    document["improving_permutation"] = std::move(permutation);
  }
  return dump(document);
}

std::string negative_cycle_to_json(const NegativeCycleWitness& witness) {
  Json document;
  Json cycle = Json::array();
  for (int machine : witness.machines) cycle.push_back(machine + 1);
  document["negative_cycle"] = std::move(cycle);
  document["cycle_weight"] = to_fraction_string(witness.weight);
  return dump(document);
}

std::string equivalence_to_json(const EquivalenceReport& report) {
  Json document;
  document["locally_efficient"] = report.locally_efficient;
  document["payments_found"] = report.payments_found;
  document["equivalent"] = report.equivalent;
  if (report.payments) document["payments"] = payments_field(*report.payments);
  if (report.refutation) {
    Json cycle = Json::array();
    for (int machine : report.refutation->machines) cycle.push_back(machine + 1);
    document["negative_cycle"] = std::move(cycle);
    document["cycle_weight"] = to_fraction_string(report.refutation->weight);
  }
  return dump(document);
}

std::string validation_to_json(const FamilyValidationReport& report) {
  Json document;
  document["ok"] = report.ok;
  document["below_half"] = cell_list(report.below_half);
  document["half_equalities"] = cell_list(report.half_equalities);
  document["bad_differences"] = cell_list(report.bad_differences);
  document["bad_diagonal"] = cell_list(report.bad_diagonal);
  document["missing_infinities"] = cell_list(report.missing_infinities);
  return dump(document);
}

std::string opt_result_to_json(const OptSearchResult& result) {
  Json document;
  document["opt_makespan"] = to_string(result.makespan);
  document["opt_allocation"] = allocation_field(result.allocation);
  return dump(document);
}

std::string ef_result_to_json(const EfSearchResult& result) {
  Json document;
  document["ef_makespan"] = to_string(result.makespan);
  document["ef_allocation"] = allocation_field(result.allocation);
  document["ef_payments"] = payments_field(result.payments);
  document["partitions_examined"] = result.partitions_examined;
  return dump(document);
}

std::string search_result_to_json(const SearchResult& result) {
  Json document;
  document["opt_makespan"] = to_string(result.opt_makespan);
  document["opt_allocation"] = allocation_field(result.opt_allocation);
  document["ef_makespan"] = to_string(result.ef_makespan);
  document["ef_allocation"] = allocation_field(result.ef_allocation);
  document["ef_payments"] = payments_field(result.ef_payments);
  if (result.ratio) {
    document["ratio"] = to_fraction_string(*result.ratio);
  } else {
    document["ratio"] = nullptr;
  }
  document["partitions_examined"] = result.partitions_examined;
  return dump(document);
}

std::string accounting_to_json(const AccountingReport& report) {
  Json document;
  document["k"] = report.k;
  document["l"] = report.l;
  if (report.k <= 62) {
    document["n_tilde"] = std::int64_t{1} << report.k;
  } else {
    document["n_tilde"] = nullptr;  // beyond 64-bit representation
  }
  document["increase_bound"] = to_fraction_string(report.increase_bound);
  document["decrease_bound"] = report.decrease_bound;
  if (report.decrease_bound_exact) {
    document["decrease_bound_exact"] = to_fraction_string(*report.decrease_bound_exact);
  } else {
    document["decrease_bound_exact"] = nullptr;
  }
  document["log_formula_decrease"] = report.log_formula_decrease;
  document["gap"] = report.gap;
  document["proof_binds"] = report.proof_binds;
  document["harmonic"] = Json{{"switch_point", kHarmonicExactLimit},
                              {"high_exact", report.high_harmonic_exact},
                              {"low_exact", report.low_harmonic_exact}};
  return dump(document);
}

std::string job_count_to_json(const JobCountReport& report) {
  Json document;
  document["makespan"] = to_string(report.observed_makespan);
  document["threshold"] = to_fraction_string(report.threshold);
  document["hypothesis_met"] = report.hypothesis_met;
  document["jobs_per_machine"] = report.jobs_per_machine;
  document["high_machine_total"] = report.high_machine_total;
  if (report.hypothesis_met) {
    document["property1_ok"] = report.property1_ok;
    document["property2_ok"] = report.property2_ok;
    document["property3_ok"] = report.property3_ok;
    document["property1_violations"] = report.property1_violations;
    document["property2_violations"] = report.property2_violations;
    document["property1_flagged"] = report.property1_flagged;
  }
  return dump(document);
}

}  // namespace efsched
