#ifndef MLINES_CHORDAL_HPP
#define MLINES_CHORDAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mlines/graph.hpp"

namespace mlines {

/// order[i] is the i-th vertex eliminated.
struct EliminationOrder {
    std::vector<int> order;
};

/// Exactly one of witness/refutation is set: a perfect elimination order
/// when the graph is chordal, an induced cycle of length >= 4 when not.
struct ChordalityResult {
    bool chordal;
    std::optional<EliminationOrder> witness;
    std::optional<std::vector<int>> refutation;
};

/// Reverse of a maximum-cardinality-search visit order, ties broken by
/// smallest vertex index. A perfect elimination order iff g is chordal.
EliminationOrder mcs_order(const Graph& g);

/// True iff at each position the later-ordered neighbours form a clique.
/// Throws InvalidArgument on a malformed permutation.
bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& o);

ChordalityResult is_chordal(const Graph& g);

/// Checks that the vertex list is an induced cycle of length >= 4
/// (consecutive vertices adjacent cyclically, no other adjacencies,
/// no repeats). Refutation validator.
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle);

/// Seeded generator of connected chordal graphs. Grows one vertex at a
/// time, attaching each to a clique of the current graph, so the result
/// is chordal and connected by construction. Identical (n, k_max, seed)
/// yield identical graphs; the draw sequence is documented in the README.
Graph random_chordal(int n, int k_max, std::uint64_t seed);

}  // namespace mlines

#endif
