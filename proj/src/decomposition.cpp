#include "u5/decomposition.hpp"

#include <string>

namespace u5 {

bool is_homogeneous_set(const Tournament& t, const VertexSet& x) {
    if (x.universe() != t.size())
        throw ContractViolation("is_homogeneous_set: universe mismatch");
    for (int v = 0; v < t.size(); ++v) {
        if (x.contains(v)) continue;
        bool beats_some = t.successors(v).intersects(x);
        VertexSet loses = x - t.successors(v);
        loses.erase(v);
        if (beats_some && loses.any()) return false;
    }
    return true;
}

VertexSet minimal_module(const Tournament& t, int u, int v) {
    int n = t.size();
    VertexSet s(n);
    s.insert(u);
    s.insert(v);
    // preds_hit: vertices with at least one successor in s;
    // succs_hit: vertices with at least one predecessor in s.
    VertexSet preds_hit = t.predecessors(u) | t.predecessors(v);
    VertexSet succs_hit = t.successors(u) | t.successors(v);
    while (true) {
        VertexSet splitters = (preds_hit & succs_hit) - s;
        int w = splitters.first();
        if (w == -1) break;
        s.insert(w);
        preds_hit |= t.predecessors(w);
        succs_hit |= t.successors(w);
    }
    return s;
}

std::optional<VertexSet> find_nontrivial_homogeneous_set(const Tournament& t) {
    int n = t.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet m = minimal_module(t, u, v);
            if (m.count() < n) {
                if (!is_homogeneous_set(t, m))
                    throw InternalInvariantViolation("module closure produced a non-homogeneous set");
                return m;
            }
        }
    return std::nullopt;
}

bool is_prime(const Tournament& t) { return !find_nontrivial_homogeneous_set(t).has_value(); }

Tournament quotient(const Tournament& t, const VertexSet& x) {
    if (x.empty()) throw ContractViolation("quotient: homogeneous set must be non-empty");
    if (!is_homogeneous_set(t, x)) throw ContractViolation("quotient: set is not homogeneous");
    VertexSet keep = x.complement();
    keep.insert(x.first());
    return induced(t, keep).tour;
}

std::vector<VertexSet> maximal_module_partition(const Tournament& t) {
    int n = t.size();
    std::vector<VertexSet> parts;
    VertexSet covered(n);
    for (int v = 0; v < n; ++v) {
        if (covered.contains(v)) continue;
        // union of all proper modules through v; in a strongly connected
        // tournament this union is itself a proper module
        VertexSet part(n);
        part.insert(v);
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            VertexSet m = minimal_module(t, v, u);
            if (m.count() < n) part |= m;
        }
        if (part.count() == n)
            throw InternalInvariantViolation("maximal modules merged to the full vertex set");
        if ((part & covered).any())
            throw InternalInvariantViolation("maximal modules overlap");
        covered |= part;
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

Tournament contract_blocks(const Tournament& t, const std::vector<VertexSet>& blocks) {
    std::vector<int> rep;
    rep.reserve(blocks.size());
    for (const auto& b : blocks) rep.push_back(b.first());
    return Tournament(static_cast<int>(blocks.size()), [&](int i, int j) {
        return t.edge(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]);
    });
}

} // namespace

DecompositionTree substitution_decomposition(const Tournament& t) {
    if (t.size() < 1) throw ContractViolation("decomposition requires at least one vertex");
    DecompositionTree node;
    node.n = t.size();
    if (t.size() == 1) return node;

    std::vector<VertexSet> comps = strong_components(t);
    if (comps.size() > 1) {
        node.linear = true;
        node.blocks = std::move(comps);
    } else {
        std::vector<VertexSet> parts = maximal_module_partition(t);
        node.blocks = std::move(parts);
        // all-singleton partition means t itself is prime
    }
    node.quotient = contract_blocks(t, node.blocks);
    node.children.reserve(node.blocks.size());
    for (const auto& b : node.blocks) node.children.push_back(substitution_decomposition(induced(t, b).tour));
    return node;
}

namespace {

void fill_edges(const DecompositionTree& tree, const std::vector<int>& to_host,
                std::vector<std::pair<int, int>>& edges) {
    if (tree.is_leaf()) return;
    std::vector<std::vector<int>> block_hosts;
    block_hosts.reserve(tree.blocks.size());
    for (const auto& b : tree.blocks) {
        std::vector<int> hosts;
        for (int v = b.first(); v != -1; v = b.next(v)) hosts.push_back(to_host[static_cast<std::size_t>(v)]);
        block_hosts.push_back(std::move(hosts));
    }
    for (std::size_t i = 0; i < tree.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < tree.blocks.size(); ++j) {
            bool fwd = tree.quotient.edge(static_cast<int>(i), static_cast<int>(j));
            for (int a : block_hosts[i])
                for (int b : block_hosts[j]) edges.push_back(fwd ? std::pair{a, b} : std::pair{b, a});
        }
    for (std::size_t i = 0; i < tree.blocks.size(); ++i) fill_edges(tree.children[i], block_hosts[i], edges);
}

} // namespace

Tournament recompose(const DecompositionTree& tree) {
    std::vector<int> identity(static_cast<std::size_t>(tree.n));
    for (int v = 0; v < tree.n; ++v) identity[static_cast<std::size_t>(v)] = v;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(tree.n) * static_cast<std::size_t>(tree.n) / 2);
    fill_edges(tree, identity, edges);
    return make_tournament(tree.n, edges);
}

} // namespace u5
