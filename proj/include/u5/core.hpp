#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "u5/vertex_set.hpp"

namespace u5 {

/// Sequence of distinct vertices such that every earlier vertex beats every
/// later one in the host tournament.
struct TransitiveOrder {
    std::vector<int> seq;

    int size() const { return static_cast<int>(seq.size()); }
    bool empty() const { return seq.empty(); }
    int operator[](int i) const { return seq[static_cast<std::size_t>(i)]; }
};

/// Complete oriented graph on vertices 0..n-1. Immutable after construction;
/// for every unordered pair exactly one direction is present and no vertex
/// beats itself. Adjacency is kept as one successor bit row per vertex so
/// edge queries are O(1) and subset scans are word-parallel.
class Tournament {
public:
    Tournament() = default;

    /// Builds from an orientation oracle: for every u < v, `u_beats_v(u, v)`
    /// decides the edge. The pair invariants hold by construction.
    Tournament(int n, const std::function<bool(int, int)>& u_beats_v);

    int size() const { return n_; }

    /// True iff u -> v.
    bool edge(int u, int v) const { return out_[static_cast<std::size_t>(u)].contains(v); }

    const VertexSet& successors(int u) const { return out_[static_cast<std::size_t>(u)]; }

    VertexSet predecessors(int u) const;

    int out_degree(int u) const { return out_[static_cast<std::size_t>(u)].count(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Tournament& a, const Tournament& b);

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
};

/// Subtournament plus the map from its labels back to host labels.
struct Induced {
    Tournament tour;
    std::vector<int> to_host; // new label i corresponds to host vertex to_host[i]
};

/// Builds a tournament from an explicit winner list: each entry (w, l) orients
/// w -> l and every unordered pair must appear exactly once.
/// Throws InputError naming the offending pair otherwise.
Tournament make_tournament(int n, std::span<const std::pair<int, int>> oriented_pairs);

/// All edges reversed.
Tournament dual(const Tournament& t);

/// Subtournament on `s`; labels are compacted preserving ascending host order.
Induced induced(const Tournament& t, const VertexSet& s);

/// The unique dominance order when `t` is transitive (out-degrees n-1..0),
/// absent otherwise. Empty and one-vertex tournaments are transitive.
std::optional<TransitiveOrder> is_transitive(const Tournament& t);

/// Strongly connected components, listed so that every earlier component
/// beats every later one. Their union is V and they are pairwise disjoint.
std::vector<VertexSet> strong_components(const Tournament& t);

/// Orientation-preserving bijection a -> b, or absent. Deterministic: returns
/// the lexicographically least valid bijection (vertex 0 of `a` gets the
/// least feasible image, and so on), found by out-degree pruned backtracking.
/// Intended for small n; larger inputs are allowed but may be slow.
std::optional<std::vector<int>> are_isomorphic(const Tournament& a, const Tournament& b);

/// True iff {a, b, c} induces a directed 3-cycle.
bool is_cyclic_triangle(const Tournament& t, int a, int b, int c);

/// Checks that `order` lists distinct in-range vertices with every earlier
/// one beating every later one.
bool is_valid_transitive_order(const Tournament& t, const TransitiveOrder& order);

} // namespace u5
