// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_PAYMENTS_HPP
#define EFSCHED_PAYMENTS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "efsched/instance.hpp"

namespace efsched {

/// Digraph on machines whose edge (i, j) carries
/// weight(i,j) = c_i(B_j) - c_i(B_i). A payment vector is envy-free exactly
/// when p_j - p_i <= weight(i,j) on every present edge; pairs where
/// c_i(B_j) is infinite impose no constraint and are absent.
struct EnvyGraph {
  int machines;
  std::vector<std::optional<Rational>> weights;  // row-major machines x machines

  const std::optional<Rational>& at(int from, int to) const {
    return weights.at(static_cast<std::size_t>(from) * machines + to);
  }
};

/// Throws InherentlyEnviousError when a machine's own bundle is infinite
/// for it while another bundle is finite for it.
EnvyGraph build_envy_graph(const CostMatrix& costs, const Allocation& alloc);

/// A machine cycle whose envy-graph weight sum is negative. Read as a
/// cyclic permutation (each machine takes the next one's bundle) it
/// strictly lowers total cost, refuting local efficiency.
struct NegativeCycleWitness {
  std::vector<int> machines;  // cycle order, smallest machine first
  Rational weight;            // strictly negative
};

using PaymentOutcome = std::variant<PaymentVector, NegativeCycleWitness>;

/// Shortest-path potentials on the envy graph from a virtual zero-weight
/// source, relaxed in fixed ascending order; payments are normalized so the
/// minimum is exactly 0. A negative cycle is returned as a certified
/// refutation instead of payments.
PaymentOutcome synthesize_payments(const CostMatrix& costs, const Allocation& alloc);

/// Both directions of the EF-implementable <=> locally-efficient
/// equivalence evaluated on one input.
struct EquivalenceReport {
  bool locally_efficient;
  bool payments_found;
  bool equivalent;
  std::optional<PaymentVector> payments;
  std::optional<NegativeCycleWitness> refutation;
};

EquivalenceReport verify_equivalence(const CostMatrix& costs, const Allocation& alloc);

}  // namespace efsched

#endif  // EFSCHED_PAYMENTS_HPP
