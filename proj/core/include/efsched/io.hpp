// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_IO_HPP
#define EFSCHED_IO_HPP

#include <optional>
#include <string>

#include "efsched/analysis.hpp"
#include "efsched/efficiency.hpp"
#include "efsched/generators.hpp"
#include "efsched/instance.hpp"
#include "efsched/payments.hpp"
#include "efsched/search.hpp"

namespace efsched {

// JSON wire formats. Machine indices and grid positions are 1-based on the
// wire; rationals are fraction strings ("p/q" or "p"), infinity is "inf".
// Parsers also accept plain decimal strings and JSON integers for values.
// Every emitter below is byte-deterministic for a given input.
//
//   instance:   {"m": int, "n": int, "costs": [[entry, ...], ...]}
//               with an optional "params" block {k, n_tilde, l, n, m}
//   allocation: {"assignment": [machine_of_job_1, ...]}
//   mechanism:  allocation fields plus {"payments": [entry, ...]}

struct InstanceDocument {
  CostMatrix costs;
  std::optional<FamilyParams> params;
};

InstanceDocument parse_instance_json(const std::string& text);
Allocation parse_allocation_json(const std::string& text, int machines, int jobs);
Mechanism parse_mechanism_json(const std::string& text, int machines, int jobs);

std::string instance_to_json(const CostMatrix& costs,
                             const std::optional<FamilyParams>& params = std::nullopt);
/// Comma-separated rows, one line per machine, "inf" for infinite entries.
std::string instance_to_csv(const CostMatrix& costs);
std::string allocation_to_json(const Allocation& alloc);
std::string mechanism_to_json(const Mechanism& mech);

std::string envy_check_to_json(const EnvyCheck& check);
std::string local_efficiency_to_json(const LocalEfficiencyCheck& check);
std::string negative_cycle_to_json(const NegativeCycleWitness& witness);
std::string equivalence_to_json(const EquivalenceReport& report);
std::string validation_to_json(const FamilyValidationReport& report);
std::string opt_result_to_json(const OptSearchResult& result);
std::string ef_result_to_json(const EfSearchResult& result);
std::string search_result_to_json(const SearchResult& result);
std::string accounting_to_json(const AccountingReport& report);
std::string job_count_to_json(const JobCountReport& report);

}  // namespace efsched

#endif  // EFSCHED_IO_HPP
