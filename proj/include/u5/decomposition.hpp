#pragma once

#include <optional>
#include <vector>

#include "u5/core.hpp"

namespace u5 {

/// A homogeneous set (module): every outside vertex either beats all of it
/// or loses to all of it.
bool is_homogeneous_set(const Tournament& t, const VertexSet& x);

/// The smallest homogeneous set containing {u, v}, grown by closure under
/// splitter vertices (vertices with both a successor and a predecessor
/// inside the set so far).
VertexSet minimal_module(const Tournament& t, int u, int v);

/// Some nontrivial homogeneous set (1 < |X| < n) if one exists, else absent.
/// Scans seed pairs in ascending order and returns the first proper closure;
/// the result is re-verified by direct scan before returning.
std::optional<VertexSet> find_nontrivial_homogeneous_set(const Tournament& t);

/// True iff every homogeneous set is trivial. All tournaments with at most
/// two vertices are prime.
bool is_prime(const Tournament& t);

/// Contracts the non-empty homogeneous set `x` to its least vertex.
/// Throws ContractViolation when x is empty or not homogeneous.
Tournament quotient(const Tournament& t, const VertexSet& x);

/// Substitution decomposition node. Labels are local to the node's own
/// tournament; children are indexed like blocks. Invariants:
///   - blocks partition the node's vertex set and each is homogeneous;
///   - the quotient has one vertex per block and more than one at every
///     internal node;
///   - at internal nodes the quotient is prime unless `linear` is set, in
///     which case the blocks are the strong components in dominance order
///     and the quotient is the transitive chain I_m.
struct DecompositionTree {
    int n = 0;
    bool linear = false;
    Tournament quotient;                  // empty for leaves
    std::vector<VertexSet> blocks;        // node-local labels
    std::vector<DecompositionTree> children;

    bool is_leaf() const { return n == 1; }
};

/// Full recursive decomposition; requires t.size() >= 1.
DecompositionTree substitution_decomposition(const Tournament& t);

/// Rebuilds the exact original tournament (same labels) from its tree.
Tournament recompose(const DecompositionTree& tree);

/// Maximal proper modules of a strongly connected tournament, listed by
/// ascending least vertex. They partition V and contracting them yields a
/// prime quotient (all singletons exactly when t is prime).
std::vector<VertexSet> maximal_module_partition(const Tournament& t);

} // namespace u5
