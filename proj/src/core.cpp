#include "u5/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace u5 {

namespace {
std::uint64_t g_claim_count = 0;
}

ClaimViolation::ClaimViolation(const std::string& what) : std::logic_error(what) {
    ++g_claim_count;
}

std::uint64_t claim_violations_observed() { return g_claim_count; }
void reset_claim_violation_counter() { g_claim_count = 0; }

Tournament::Tournament(int n, const std::function<bool(int, int)>& u_beats_v)
    : n_(n), out_(static_cast<std::size_t>(n), VertexSet(n)) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u_beats_v(u, v))
                out_[static_cast<std::size_t>(u)].insert(v);
            else
                out_[static_cast<std::size_t>(v)].insert(u);
        }
}

VertexSet Tournament::predecessors(int u) const {
    VertexSet p = out_[static_cast<std::size_t>(u)].complement();
    p.erase(u);
    return p;
}

bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
}

Tournament make_tournament(int n, std::span<const std::pair<int, int>> oriented_pairs) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    auto pair_name = [](int a, int b) {
        return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    };
    // seen[u*n+v] marks the unordered pair; winner[u*n+v] the direction.
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<char> forward(seen.size(), 0);
    for (auto [w, l] : oriented_pairs) {
        if (w < 0 || w >= n || l < 0 || l >= n)
            throw InputError("pair " + pair_name(w, l) + " out of range for n=" + std::to_string(n));
        if (w == l) throw InputError("self-pair " + pair_name(w, l));
        int a = std::min(w, l), b = std::max(w, l);
        std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
        if (seen[key]) throw InputError("duplicate pair " + pair_name(a, b));
        seen[key] = 1;
        forward[key] = static_cast<char>(w < l);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)])
                throw InputError("missing pair " + pair_name(a, b));
    return Tournament(n, [&](int u, int v) {
        return forward[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] != 0;
    });
}

Tournament dual(const Tournament& t) {
    return Tournament(t.size(), [&](int u, int v) { return t.edge(v, u); });
}

Induced induced(const Tournament& t, const VertexSet& s) {
    if (s.universe() != t.size())
        throw ContractViolation("induced: subset universe does not match tournament");
    std::vector<int> map = s.to_vector();
    Tournament sub(static_cast<int>(map.size()), [&](int a, int b) {
        return t.edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    });
    return Induced{std::move(sub), std::move(map)};
}

std::optional<TransitiveOrder> is_transitive(const Tournament& t) {
    int n = t.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = t.out_degree(a), db = t.out_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!t.edge(order[i], order[j])) return std::nullopt;
    return TransitiveOrder{std::move(order)};
}

std::vector<VertexSet> strong_components(const Tournament& t) {
    // In a tournament the condensation is a total order, and sorting by
    // out-degree descending places each component as a contiguous segment:
    // a prefix is a union of leading components exactly when its out-degrees
    // sum to C(k,2) + k(n-k).
    int n = t.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = t.out_degree(a), db = t.out_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<VertexSet> comps;
    long long degsum = 0;
    int start = 0;
    for (int k = 1; k <= n; ++k) {
        degsum += t.out_degree(order[static_cast<std::size_t>(k - 1)]);
        long long want = static_cast<long long>(k) * (k - 1) / 2 +
                         static_cast<long long>(k) * (n - k);
        if (degsum == want) {
            VertexSet c(n);
            for (int i = start; i < k; ++i) c.insert(order[static_cast<std::size_t>(i)]);
            comps.push_back(std::move(c));
            start = k;
        }
    }
    return comps;
}

namespace {

bool iso_backtrack(const Tournament& a, const Tournament& b, std::vector<int>& image,
                   std::vector<char>& used, int depth) {
    int n = a.size();
    if (depth == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (a.out_degree(depth) != b.out_degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            ok = a.edge(prev, depth) == b.edge(image[static_cast<std::size_t>(prev)], cand);
        if (!ok) continue;
        image[static_cast<std::size_t>(depth)] = cand;
        used[static_cast<std::size_t>(cand)] = 1;
        if (iso_backtrack(a, b, image, used, depth + 1)) return true;
        used[static_cast<std::size_t>(cand)] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return std::nullopt;
    int n = a.size();
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.out_degree(v));
        db.push_back(b.out_degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    if (iso_backtrack(a, b, image, used, 0)) return image;
    return std::nullopt;
}

bool is_cyclic_triangle(const Tournament& t, int a, int b, int c) {
    if (a == b || b == c || a == c) return false;
    return (t.edge(a, b) && t.edge(b, c) && t.edge(c, a)) ||
           (t.edge(b, a) && t.edge(c, b) && t.edge(a, c));
}

bool is_valid_transitive_order(const Tournament& t, const TransitiveOrder& order) {
    VertexSet seen(t.size());
    for (int v : order.seq) {
        if (v < 0 || v >= t.size() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < order.seq.size(); ++i)
        for (std::size_t j = i + 1; j < order.seq.size(); ++j)
            if (!t.edge(order.seq[i], order.seq[j])) return false;
    return true;
}

} // namespace u5
