// SPDX-License-Identifier: Apache-2.0
#include "efsched/payments.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "efsched/efficiency.hpp"
#include "efsched/errors.hpp"

namespace efsched {

EnvyGraph build_envy_graph(const CostMatrix& costs, const Allocation& alloc) {
  const int m = costs.machines();
  const auto bundles = bundles_by_machine(alloc, m);
  std::vector<ExtendedCost> own(m);
  for (int i = 0; i < m; ++i) own[i] = bundle_cost(costs, i, bundles[i]);

  EnvyGraph graph{m, std::vector<std::optional<Rational>>(
                         static_cast<std::size_t>(m) * m, std::nullopt)};
  for (int i = 0; i < m; ++i) {
    if (own[i].is_infinite()) {
      // No payment can compensate i if any other bundle is finite for it.
      for (int j = 0; j < m; ++j) {
        if (j != i && bundle_cost(costs, i, bundles[j]).is_finite()) {
          throw InherentlyEnviousError(
              i, j,
              "machine " + std::to_string(i + 1) + " has an infinite own load but bundle of " +
                  std::to_string(j + 1) + " is finite for it");
        }
      }
      graph.weights[static_cast<std::size_t>(i) * m + i] = Rational(0);
      continue;
    }
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        graph.weights[static_cast<std::size_t>(i) * m + j] = Rational(0);
        continue;
      }
      ExtendedCost cross = bundle_cost(costs, i, bundles[j]);
      if (cross.is_finite()) {
        graph.weights[static_cast<std::size_t>(i) * m + j] = cross.finite() - own[i].finite();
      }
    }
  }
  return graph;
}

namespace {

NegativeCycleWitness extract_cycle(const EnvyGraph& graph, const std::vector<int>& predecessor,
                                   int touched) {
  const int m = graph.machines;
  // Walk back m steps to land inside the cycle, then collect it.
  int node = touched;
  for (int step = 0; step < m; ++step) node = predecessor[node];
  std::vector<int> backward;
  int cursor = node;
  do {
    backward.push_back(cursor);
    cursor = predecessor[cursor];
  } while (cursor != node);
  std::reverse(backward.begin(), backward.end());  // follow edge direction

  // Deterministic presentation: rotate the smallest machine to the front.
  const auto smallest = std::min_element(backward.begin(), backward.end());
  std::rotate(backward.begin(), smallest, backward.end());

  Rational weight(0);
  for (std::size_t a = 0; a < backward.size(); ++a) {
    const int from = backward[a];
    const int to = backward[(a + 1) % backward.size()];
    weight += *graph.at(from, to);
  }
  if (weight >= 0) throw std::logic_error("extracted cycle is not negative");
  return NegativeCycleWitness{std::move(backward), std::move(weight)};
}

}  // namespace

PaymentOutcome synthesize_payments(const CostMatrix& costs, const Allocation& alloc) {
  const EnvyGraph graph = build_envy_graph(costs, alloc);
  const int m = graph.machines;

  // Single-source shortest paths from a virtual source with zero-weight
  // edges to every machine: dist starts at 0 and edges relax in fixed
  // ascending order until stable.
  std::vector<Rational> dist(m, Rational(0));
  std::vector<int> predecessor(m, -1);
  bool changed = true;
  for (int round = 0; round < m && changed; ++round) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const auto& w = graph.at(i, j);
        if (!w) continue;
        if (dist[i] + *w < dist[j]) {
          dist[j] = dist[i] + *w;
          predecessor[j] = i;
          changed = true;
        }
      }
    }
  }
  if (changed) {
    // One more sweep; any further relaxation certifies a negative cycle.
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const auto& w = graph.at(i, j);
        if (!w) continue;
        if (dist[i] + *w < dist[j]) {
          predecessor[j] = i;
          return extract_cycle(graph, predecessor, j);
        }
      }
    }
  }

  const Rational lowest = *std::min_element(dist.begin(), dist.end());
  PaymentVector payments;
  payments.values.reserve(m);
  for (const Rational& d : dist) payments.values.push_back(d - lowest);
  return payments;
}

EquivalenceReport verify_equivalence(const CostMatrix& costs, const Allocation& alloc) {
  EquivalenceReport report{};
  report.locally_efficient = is_locally_efficient(costs, alloc).locally_efficient;
  PaymentOutcome outcome = synthesize_payments(costs, alloc);
  if (auto* payments = std::get_if<PaymentVector>(&outcome)) {
    report.payments_found = true;
    report.payments = std::move(*payments);
  } else {
    report.payments_found = false;
    report.refutation = std::move(std::get<NegativeCycleWitness>(outcome));
  }
  report.equivalent = report.locally_efficient == report.payments_found;
  return report;
}

}  // namespace efsched
