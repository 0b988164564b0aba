#include "u5/structure.hpp"

#include <algorithm>
#include <array>

namespace u5 {

namespace {

std::uint64_t g_primal_routes = 0;
std::uint64_t g_dual_routes = 0;

const Tournament& u5_pattern() {
    static const Tournament p = gen_family(Family::U, 5);
    return p;
}

} // namespace

std::uint64_t extend_primal_routes() { return g_primal_routes; }
std::uint64_t extend_dual_routes() { return g_dual_routes; }
void reset_extend_route_counters() { g_primal_routes = g_dual_routes = 0; }

VertexSet TrianglePartition::members(int universe) const {
    VertexSet s(universe);
    for (const auto* o : {&x, &y, &z})
        for (int v : o->seq) s.insert(v);
    return s;
}

std::optional<InsertionProfile> insertion_profile(const Tournament& t, int u,
                                                  const TransitiveOrder& part) {
    int m = part.size();
    int pos = m; // 0-based index of the first part element u beats
    for (int i = 0; i < m; ++i) {
        if (t.edge(u, part[i])) {
            pos = i;
            break;
        }
    }
    for (int i = pos + 1; i < m; ++i)
        if (!t.edge(u, part[i])) return std::nullopt;
    return InsertionProfile{pos + 1};
}

MergeCheck merge_positions(const Tournament& t, const TransitiveOrder& first,
                           const TransitiveOrder& second) {
    int prev = 1;
    int prev_vertex = -1;
    for (int x : first.seq) {
        auto prof = insertion_profile(t, x, second);
        if (!prof) {
            // first j with second[j] -> x after some i with x -> second[i]
            int beat = -1;
            for (int i = 0; i < second.size(); ++i) {
                if (beat == -1 && t.edge(x, second[i])) beat = i;
                else if (beat != -1 && t.edge(second[i], x))
                    return MergeCheck{false, std::pair{second[beat], second[i]}};
            }
            return MergeCheck{false, std::nullopt};
        }
        if (prof->position < prev) return MergeCheck{false, std::pair{prev_vertex, x}};
        prev = prof->position;
        prev_vertex = x;
    }
    return MergeCheck{true, std::nullopt};
}

bool verify_triangle_partition_on(const Tournament& host, const TrianglePartition& p,
                                  const VertexSet& universe_members) {
    // distinct, in range, covering exactly
    VertexSet seen(host.size());
    for (const auto* o : {&p.x, &p.y, &p.z}) {
        for (int v : o->seq) {
            if (v < 0 || v >= host.size() || seen.contains(v)) return false;
            seen.insert(v);
        }
        if (!is_valid_transitive_order(host, *o)) return false;
    }
    if (!(seen == universe_members)) return false;
    // pairwise unions transitive, decided by insertion-position monotonicity
    return merge_positions(host, p.x, p.y).transitive &&
           merge_positions(host, p.y, p.z).transitive &&
           merge_positions(host, p.z, p.x).transitive;
}

bool verify_triangle_partition(const Tournament& t, const TrianglePartition& p) {
    return verify_triangle_partition_on(t, p, VertexSet::full(t.size()));
}

std::optional<CriticalMatch> identify_critical(const Tournament& t) {
    int n = t.size();
    if (n < 1 || n % 2 == 0) return std::nullopt;
    if (n == 1) return CriticalMatch{Family::T, 1, {0}};
    // at n = 3 the three families coincide; report kind T
    std::vector<Family> kinds =
        n == 3 ? std::vector<Family>{Family::T} : std::vector<Family>{Family::T, Family::U, Family::W};
    for (Family kind : kinds) {
        if (auto iso = are_isomorphic(gen_family(kind, n), t))
            return CriticalMatch{kind, n, std::move(*iso)};
    }
    return std::nullopt;
}

// --- triangle sequences ------------------------------------------------------

namespace {

std::vector<TriangleSequence::Triple> build_sequence(const Tournament& h, const TransitiveOrder& ox,
                                                     const TransitiveOrder& oy,
                                                     const TransitiveOrder& oz) {
    int l = ox.size(), m = oy.size(), n = oz.size();
    if (l < 1 || m < 1 || n < 1)
        throw ContractViolation("triangle sequence requires all three parts non-empty");
    if (!is_cyclic_triangle(h, ox[0], oy[0], oz[0]))
        throw InternalInvariantViolation("first-part heads do not form a cyclic triangle");
    std::vector<TriangleSequence::Triple> seq{{0, 0, 0}};
    int i = 0, j = 0, k = 0;
    while (i + j + k < l + m + n - 3) {
        if (i + 1 < l && is_cyclic_triangle(h, ox[i + 1], oy[j], oz[k]))
            ++i;
        else if (j + 1 < m && is_cyclic_triangle(h, ox[i], oy[j + 1], oz[k]))
            ++j;
        else if (k + 1 < n && is_cyclic_triangle(h, ox[i], oy[j], oz[k + 1]))
            ++k;
        else
            throw InternalInvariantViolation("triangle sequence cannot be extended");
        seq.push_back({i, j, k});
    }
    return seq;
}

} // namespace

TriangleSequence triangle_sequence(const Tournament& t, const TrianglePartition& p) {
    if (t.size() < 3) throw ContractViolation("triangle sequence requires at least three vertices");
    if (strong_components(t).size() != 1)
        throw ContractViolation("triangle sequence requires a strongly connected tournament");
    if (!verify_triangle_partition(t, p))
        throw ContractViolation("triangle sequence requires a valid partition");
    if (p.x.empty() || p.y.empty() || p.z.empty())
        throw ContractViolation("triangle sequence requires all three parts non-empty");
    return TriangleSequence{build_sequence(t, p.x, p.y, p.z)};
}

// --- forbidden-configuration scan --------------------------------------------

std::vector<Lemma4Violation> lemma4_scan(const Tournament& t, int v) {
    int n = t.size();
    if (v < 0 || v >= n) throw ContractViolation("lemma4_scan: vertex out of range");
    const VertexSet& A = t.successors(v);
    std::vector<Lemma4Violation> out;
    std::vector<int> others;
    for (int w = 0; w < n; ++w)
        if (w != v) others.push_back(w);

    auto in_a = [&](int w) { return A.contains(w); };
    auto count_a = [&](int a, int b, int c) {
        return static_cast<int>(in_a(a)) + static_cast<int>(in_a(b)) + static_cast<int>(in_a(c));
    };

    // rules (a) and (b): a dominating or dominated vertex of a mixed triangle
    for (std::size_t ia = 0; ia < others.size(); ++ia)
        for (std::size_t ib = ia + 1; ib < others.size(); ++ib)
            for (std::size_t ic = ib + 1; ic < others.size(); ++ic) {
                int a = others[ia], b = others[ib], c = others[ic];
                if (!is_cyclic_triangle(t, a, b, c)) continue;
                int ca = count_a(a, b, c);
                if (ca != 1 && ca != 2) continue;
                for (int u : others) {
                    if (u == a || u == b || u == c) continue;
                    bool dominates = t.edge(u, a) && t.edge(u, b) && t.edge(u, c);
                    bool dominated = t.edge(a, u) && t.edge(b, u) && t.edge(c, u);
                    if (ca == 1 && dominates && in_a(u))
                        out.push_back({'a', {a, b, c}, u,
                                       "successor of the pivot dominates a triangle meeting its successors once"});
                    if (ca == 2 && dominated && !in_a(u))
                        out.push_back({'b', {a, b, c}, u,
                                       "predecessor of the pivot is dominated by a triangle meeting its successors twice"});
                }
            }

    // rules (c)-(e): triangles sharing two vertices, third vertices ordered
    for (std::size_t ip = 0; ip < others.size(); ++ip)
        for (std::size_t iq = ip + 1; iq < others.size(); ++iq) {
            int p = others[ip], q = others[iq];
            std::vector<int> third;
            for (int w : others)
                if (w != p && w != q && is_cyclic_triangle(t, w, p, q)) third.push_back(w);
            for (int x : third)
                for (int xp : third) {
                    if (x == xp || !t.edge(x, xp)) continue;
                    int cx = count_a(x, p, q), cxp = count_a(xp, p, q);
                    if (cx > 0 && cxp == 0)
                        out.push_back({'c', {x, p, q}, xp, "successor count drops to zero across the shared pair"});
                    if (cx == 3 && cxp != 3)
                        out.push_back({'d', {x, p, q}, xp, "successor count drops from three across the shared pair"});
                    int y = t.edge(p, q) ? p : q;
                    int z = t.edge(p, q) ? q : p;
                    if (!in_a(y) && in_a(z) && in_a(x) != in_a(xp))
                        out.push_back({'e', {x, y, z}, xp, "third vertices split across the pivot"});
                }
        }
    return out;
}

// --- prime chains -------------------------------------------------------------

std::vector<VertexSet> find_prime_chain(const Tournament& t) {
    if (!is_prime(t)) throw ContractViolation("prime chain requires a prime tournament");
    VertexSet current = VertexSet::full(t.size());
    std::vector<VertexSet> chain{current};
    while (true) {
        Induced cur = induced(t, current);
        if (cur.tour.size() <= 5) break; // every five-vertex prime is critical; the chain ends here
        if (auto c = identify_critical(cur.tour)) {
            for (int& w : c->image) w = cur.to_host[static_cast<std::size_t>(w)];
            throw CriticalStageError(std::move(*c), current);
        }
        bool found = false;
        for (int u = current.first(); u != -1; u = current.next(u)) {
            VertexSet smaller = current;
            smaller.erase(u);
            if (is_prime(induced(t, smaller).tour)) {
                current = smaller;
                chain.push_back(current);
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalInvariantViolation("non-critical prime with no prime one-vertex deletion");
    }
    return chain;
}

// --- the induction step --------------------------------------------------------

namespace {

struct RoleOrders {
    std::array<TransitiveOrder, 3> ord; // x, y, z
};

TransitiveOrder reversed(const TransitiveOrder& o) {
    TransitiveOrder r = o;
    std::reverse(r.seq.begin(), r.seq.end());
    return r;
}

[[noreturn]] void claim_fail(const std::string& which, const std::string& state) {
    throw ClaimViolation("claim check failed (" + which + "): " + state);
}

std::string dump_state(int r0, int i0, int j0, int k0, int s, int tpos) {
    return "r0=" + std::to_string(r0 + 1) + " i0=" + std::to_string(i0) + " j0=" + std::to_string(j0) +
           " k0=" + std::to_string(k0) + " s=" + std::to_string(s) + " t=" + std::to_string(tpos);
}

/// Core of the extension step, after the dual reduction: seq contains a
/// triangle meeting A twice. Inserts v and returns the verified partition of
/// the sub-universe spanned by the orders plus v.
TrianglePartition extend_core(const Tournament& h, std::array<TransitiveOrder, 3> ord,
                              std::vector<TriangleSequence::Triple> seq, int v, const VertexSet& a_set) {
    auto vert = [&](const TriangleSequence::Triple& tr, int role) {
        return role == 0 ? ord[0][tr.xi] : role == 1 ? ord[1][tr.yj] : ord[2][tr.zk];
    };
    auto in_a = [&](int w) { return a_set.contains(w); };

    int r0 = -1;
    for (std::size_t r = 0; r < seq.size(); ++r) {
        int c = static_cast<int>(in_a(vert(seq[r], 0))) + static_cast<int>(in_a(vert(seq[r], 1))) +
                static_cast<int>(in_a(vert(seq[r], 2)));
        if (c == 2) {
            r0 = static_cast<int>(r);
            break;
        }
    }
    if (r0 < 0) throw InternalInvariantViolation("extension core called without a two-successor triangle");

    // rotate part roles so that the minimum two-successor triangle reads
    // x -> y -> z -> x with z the predecessor-side vertex
    int vb = -1;
    std::array<int, 3> tri{vert(seq[static_cast<std::size_t>(r0)], 0), vert(seq[static_cast<std::size_t>(r0)], 1),
                           vert(seq[static_cast<std::size_t>(r0)], 2)};
    std::array<int, 3> role_of{0, 1, 2};
    for (int r = 0; r < 3; ++r)
        if (!in_a(tri[static_cast<std::size_t>(r)])) vb = r;
    // the predecessor-side vertex beats exactly one triangle vertex: new x
    int zx = -1;
    for (int r = 0; r < 3; ++r)
        if (r != vb && h.edge(tri[static_cast<std::size_t>(vb)], tri[static_cast<std::size_t>(r)])) zx = r;
    int zy = 3 - vb - zx;
    role_of = {zx, zy, vb}; // new role index -> old role index

    std::array<TransitiveOrder, 3> rord{ord[static_cast<std::size_t>(role_of[0])],
                                        ord[static_cast<std::size_t>(role_of[1])],
                                        ord[static_cast<std::size_t>(role_of[2])]};
    auto remap = [&](const TriangleSequence::Triple& tr) {
        std::array<int, 3> old{tr.xi, tr.yj, tr.zk};
        return TriangleSequence::Triple{old[static_cast<std::size_t>(role_of[0])],
                                        old[static_cast<std::size_t>(role_of[1])],
                                        old[static_cast<std::size_t>(role_of[2])]};
    };
    for (auto& tr : seq) tr = remap(tr);
    ord = std::move(rord);

    // orientation of every triangle in the sequence follows the anchor
    for (const auto& tr : seq) {
        int xw = ord[0][tr.xi], yw = ord[1][tr.yj], zw = ord[2][tr.zk];
        if (!(h.edge(xw, yw) && h.edge(yw, zw) && h.edge(zw, xw)))
            claim_fail("triangle orientation", "triangle (" + std::to_string(xw) + "," + std::to_string(yw) +
                                                   "," + std::to_string(zw) + ")");
    }

    const int l = ord[0].size(), m = ord[1].size(), nz = ord[2].size();
    const int i0 = seq[static_cast<std::size_t>(r0)].xi + 1; // 1-based
    const int j0 = seq[static_cast<std::size_t>(r0)].yj + 1;
    const int k0 = seq[static_cast<std::size_t>(r0)].zk + 1;

    int s = 0;
    for (int j = 1; j <= m; ++j)
        if (in_a(ord[1][j - 1])) {
            s = j;
            break;
        }
    int tpos = 0;
    for (int k = nz; k >= 1; --k)
        if (!in_a(ord[2][k - 1])) {
            tpos = k + 1;
            break;
        }
    const std::string state = dump_state(r0, i0, j0, k0, s, tpos);
    if (s == 0 || s > j0) claim_fail("s within range", state);
    if (tpos == 0 || tpos < k0 + 1) claim_fail("t within range", state);

    // conclusions (1)-(3): v splits each part cleanly at i0, s, t
    for (int i = 1; i <= l; ++i)
        if (in_a(ord[0][i - 1]) != (i >= i0)) claim_fail("x-part split at i0", state);
    for (int j = 1; j <= m; ++j)
        if (in_a(ord[1][j - 1]) != (j >= s)) claim_fail("y-part split at s", state);
    for (int k = 1; k <= nz; ++k)
        if (in_a(ord[2][k - 1]) != (k >= tpos)) claim_fail("z-part split at t", state);

    // conclusions (4)-(5): insertion bounds against the neighbours of x_{i0}
    auto profile_or_fail = [&](int xv, const TransitiveOrder& part, const char* which) {
        auto prof = insertion_profile(h, xv, part);
        if (!prof) claim_fail(std::string("insertion profile undefined for ") + which, state);
        return prof->position;
    };
    if (i0 > 1) {
        int sp = profile_or_fail(ord[0][i0 - 2], ord[1], "x_{i0-1} vs Y");
        int tp = profile_or_fail(ord[0][i0 - 2], ord[2], "x_{i0-1} vs Z");
        if (sp > s) claim_fail("s lower insertion bound", state);
        if (tp > tpos) claim_fail("t lower insertion bound", state);
    }
    {
        int sp = profile_or_fail(ord[0][i0 - 1], ord[1], "x_{i0} vs Y");
        int tp = profile_or_fail(ord[0][i0 - 1], ord[2], "x_{i0} vs Z");
        if (s > sp) claim_fail("s upper insertion bound", state);
        if (tpos > tp) claim_fail("t upper insertion bound", state);
    }

    TrianglePartition result;
    result.x = ord[0];
    result.x.seq.insert(result.x.seq.begin() + (i0 - 1), v);
    result.y = ord[1];
    result.z = ord[2];

    VertexSet universe(h.size());
    for (const auto* o : {&result.x, &result.y, &result.z})
        for (int w : o->seq) universe.insert(w);
    if (!verify_triangle_partition_on(h, result, universe))
        claim_fail("extended partition verification", state);
    return result;
}

/// Extension step over a sub-universe of `host`; p covers W, v is outside W.
TrianglePartition extend_on_subset(const Tournament& host, const TrianglePartition& p, int v) {
    if (p.x.empty() || p.y.empty() || p.z.empty())
        throw ContractViolation("extension requires all three parts non-empty");
    VertexSet w = p.members(host.size());
    if (w.contains(v)) throw ContractViolation("extension vertex already in the partition");

    std::vector<TriangleSequence::Triple> seq = build_sequence(host, p.x, p.y, p.z);
    VertexSet a_set = host.successors(v) & w;

    auto count_in = [&](const TriangleSequence::Triple& tr) {
        int c = 0;
        c += a_set.contains(p.x[tr.xi]);
        c += a_set.contains(p.y[tr.yj]);
        c += a_set.contains(p.z[tr.zk]);
        return c;
    };
    bool has_two = false, has_one = false;
    for (const auto& tr : seq) {
        int c = count_in(tr);
        if (c == 2) has_two = true;
        if (c == 1) has_one = true;
    }
    if (has_two) {
        ++g_primal_routes;
        return extend_core(host, {p.x, p.y, p.z}, seq, v, a_set);
    }
    if (!has_one)
        throw InternalInvariantViolation(
            "every sequence triangle is unsplit; the remainder would be homogeneous");

    // dual route: reverse all edges; the reversed sequence is a valid chain
    // for the reversed part orders, and the one-successor triangles become
    // two-successor ones
    ++g_dual_routes;
    Tournament hd = dual(host);
    std::array<TransitiveOrder, 3> rord{reversed(p.x), reversed(p.y), reversed(p.z)};
    const int l = p.x.size(), m = p.y.size(), nz = p.z.size();
    std::vector<TriangleSequence::Triple> rseq;
    rseq.reserve(seq.size());
    for (std::size_t r = seq.size(); r-- > 0;)
        rseq.push_back({l - 1 - seq[r].xi, m - 1 - seq[r].yj, nz - 1 - seq[r].zk});
    VertexSet a_dual = (w - a_set);
    TrianglePartition res = extend_core(hd, rord, std::move(rseq), v, a_dual);
    res.x = reversed(res.x);
    res.y = reversed(res.y);
    res.z = reversed(res.z);
    VertexSet universe = w;
    universe.insert(v);
    if (!verify_triangle_partition_on(host, res, universe))
        claim_fail("un-dualized partition verification", "dual route");
    return res;
}

} // namespace

TrianglePartition extend_partition(const Tournament& g, const TrianglePartition& p, int v) {
    if (v < 0 || v >= g.size()) throw ContractViolation("extension vertex out of range");
    VertexSet expect = VertexSet::full(g.size());
    expect.erase(v);
    if (!verify_triangle_partition_on(g, p, expect))
        throw ContractViolation("extension requires a valid partition of the tournament minus v");
    if (!is_prime(g)) throw ContractViolation("extension requires a prime tournament");
    return extend_on_subset(g, p, v);
}

// --- partition construction -----------------------------------------------------

namespace {

TrianglePartition w_partition(const CriticalMatch& c) {
    TrianglePartition p;
    p.x.seq.push_back(c.image[0]);
    for (int i = 1; i < c.n; i += 2) p.y.seq.push_back(c.image[static_cast<std::size_t>(i)]);
    for (int i = 2; i < c.n; i += 2) p.z.seq.push_back(c.image[static_cast<std::size_t>(i)]);
    return p;
}

} // namespace

std::optional<TrianglePartition> find_triangle_partition_prime(const Tournament& t) {
    if (!is_prime(t)) throw ContractViolation("partition construction requires a prime tournament");
    int n = t.size();
    TrianglePartition p;
    if (n == 0) return p;
    if (n <= 2) {
        p.x = *is_transitive(t);
        return p;
    }
    try {
        VertexSet current = VertexSet::full(n);
        std::vector<int> removed;
        TrianglePartition base;
        while (true) {
            Induced cur = induced(t, current);
            if (auto c = identify_critical(cur.tour)) {
                for (int& w : c->image) w = cur.to_host[static_cast<std::size_t>(w)];
                if (c->n == 3) {
                    base.x.seq = {c->image[0]};
                    base.y.seq = {c->image[1]};
                    base.z.seq = {c->image[2]};
                    break;
                }
                if (c->kind == Family::W) {
                    base = w_partition(*c);
                    break;
                }
                return std::nullopt; // T_n or U_n: contains an obstruction
            }
            if (cur.tour.size() <= 5)
                throw InternalInvariantViolation("five-vertex prime stage is not critical");
            bool found = false;
            for (int u = current.first(); u != -1; u = current.next(u)) {
                VertexSet smaller = current;
                smaller.erase(u);
                if (is_prime(induced(t, smaller).tour)) {
                    removed.push_back(u);
                    current = smaller;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw InternalInvariantViolation("non-critical prime with no prime one-vertex deletion");
        }
        TrianglePartition part = base;
        for (auto it = removed.rbegin(); it != removed.rend(); ++it)
            part = extend_on_subset(t, part, *it);
        if (!verify_triangle_partition(t, part))
            throw InternalInvariantViolation("assembled partition failed final verification");
        return part;
    } catch (const ClaimViolation&) {
        // a theorem-backed step refused: t contains one of the obstructions
        return std::nullopt;
    }
}

// --- certificates ----------------------------------------------------------------

namespace {

Certificate certify_prime(const Tournament& p);

Certificate certify_node(const Tournament& tour, const DecompositionTree& node) {
    if (node.is_leaf()) {
        TrianglePartition tp;
        tp.x.seq = {0};
        return Certificate{PartitionCert{std::move(tp)}};
    }
    bool trivial = !node.linear && static_cast<int>(node.blocks.size()) == node.n;
    if (trivial) return certify_prime(tour);

    Certificate qc;
    if (node.linear) {
        TrianglePartition tp;
        for (int i = 0; i < node.quotient.size(); ++i) tp.x.seq.push_back(i);
        qc = Certificate{PartitionCert{std::move(tp)}};
    } else {
        qc = certify_prime(node.quotient);
    }
    if (!qc.certifies_free()) {
        Embedding lifted = qc.as_forbidden()->embedding;
        for (int& w : lifted.image) w = node.blocks[static_cast<std::size_t>(w)].first();
        return Certificate{ForbiddenCopyCert{std::move(lifted)}};
    }

    std::vector<Certificate> block_certs;
    block_certs.reserve(node.blocks.size());
    for (std::size_t i = 0; i < node.blocks.size(); ++i) {
        Induced ind = induced(tour, node.blocks[i]);
        Certificate child = certify_node(ind.tour, node.children[i]);
        if (!child.certifies_free()) {
            Embedding lifted = child.as_forbidden()->embedding;
            for (int& w : lifted.image) w = ind.to_host[static_cast<std::size_t>(w)];
            return Certificate{ForbiddenCopyCert{std::move(lifted)}};
        }
        block_certs.push_back(std::move(child));
    }
    CompositeCert comp;
    comp.linear = node.linear;
    comp.blocks = node.blocks;
    comp.quotient_cert = std::make_unique<Certificate>(std::move(qc));
    comp.block_certs = std::move(block_certs);
    return Certificate{std::move(comp)};
}

Certificate certify_prime(const Tournament& p) {
    int n = p.size();
    if (auto c = identify_critical(p)) {
        if (c->kind == Family::T) return Certificate{CriticalCert{c->n, std::move(c->image)}};
        if (c->kind == Family::W) return Certificate{PartitionCert{w_partition(*c)}};
        // U_n, n >= 5: contains the pattern; derive the witness through the
        // identification, falling back to plain search
        Embedding emb;
        std::vector<int> wit = u5_witness_in_un(n);
        emb.image.resize(5);
        for (int i = 0; i < 5; ++i)
            emb.image[static_cast<std::size_t>(i)] = c->image[static_cast<std::size_t>(wit[static_cast<std::size_t>(i)])];
        if (!verify_embedding(p, u5_pattern(), emb)) {
            auto found = find_embedding(p, u5_pattern());
            if (!found) throw InternalInvariantViolation("U_n identification without a pattern copy");
            emb = std::move(*found);
        }
        return Certificate{ForbiddenCopyCert{std::move(emb)}};
    }
    if (auto part = find_triangle_partition_prime(p))
        return Certificate{PartitionCert{std::move(*part)}};
    auto emb = find_embedding(p, u5_pattern());
    if (!emb)
        throw InternalInvariantViolation("prime tournament with neither certificate nor pattern copy");
    return Certificate{ForbiddenCopyCert{std::move(*emb)}};
}

} // namespace

Certificate certify_u5_status(const Tournament& t) {
    if (t.size() == 0) return Certificate{PartitionCert{}};
    DecompositionTree tree = substitution_decomposition(t);
    return certify_node(t, tree);
}

// --- certificate verification -----------------------------------------------------

namespace {

CertCheck fail(std::string reason) { return CertCheck{false, std::move(reason)}; }

CertCheck verify_freeness_cert(const Tournament& t, const Certificate& cert);

CertCheck verify_composite(const Tournament& t, const CompositeCert& c) {
    int n = t.size();
    if (c.blocks.size() < 2) return fail("composite needs at least two blocks");
    if (!c.quotient_cert) return fail("composite missing quotient certificate");
    VertexSet seen(n);
    for (const auto& b : c.blocks) {
        if (b.universe() != n) return fail("block universe mismatch");
        if (b.empty()) return fail("empty block");
        if ((b & seen).any()) return fail("blocks overlap");
        seen |= b;
    }
    if (!(seen == VertexSet::full(n))) return fail("blocks do not cover the vertex set");
    for (std::size_t i = 0; i < c.blocks.size(); ++i)
        if (!is_homogeneous_set(t, c.blocks[i]))
            return fail("block " + std::to_string(i) + " is not homogeneous");

    std::vector<int> rep;
    rep.reserve(c.blocks.size());
    for (const auto& b : c.blocks) rep.push_back(b.first());
    Tournament quot(static_cast<int>(c.blocks.size()), [&](int i, int j) {
        return t.edge(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]);
    });
    if (c.linear) {
        for (std::size_t i = 0; i < rep.size(); ++i)
            for (std::size_t j = i + 1; j < rep.size(); ++j)
                if (!quot.edge(static_cast<int>(i), static_cast<int>(j)))
                    return fail("linear node blocks are not in dominance order");
    }
    CertCheck qr = verify_freeness_cert(quot, *c.quotient_cert);
    if (!qr.valid) return fail("quotient certificate: " + qr.reason);
    if (c.block_certs.size() != c.blocks.size()) return fail("one certificate per block required");
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        Induced ind = induced(t, c.blocks[i]);
        CertCheck br = verify_freeness_cert(ind.tour, c.block_certs[i]);
        if (!br.valid) return fail("block " + std::to_string(i) + " certificate: " + br.reason);
    }
    return CertCheck{true, {}};
}

CertCheck verify_freeness_cert(const Tournament& t, const Certificate& cert) {
    if (cert.as_forbidden()) return fail("embedded forbidden-copy certificate cannot certify freeness");
    return verify_certificate(t, cert);
}

} // namespace

CertCheck verify_certificate(const Tournament& t, const Certificate& cert) {
    if (const auto* f = cert.as_forbidden()) {
        if (!verify_embedding(t, u5_pattern(), f->embedding))
            return fail("image does not induce the forbidden pattern");
        return CertCheck{true, {}};
    }
    if (const auto* c = cert.as_critical()) {
        if (c->n != t.size()) return fail("critical certificate order mismatch");
        if (c->n < 1 || c->n % 2 == 0) return fail("critical order must be odd and positive");
        if (static_cast<int>(c->image.size()) != c->n) return fail("critical image size mismatch");
        VertexSet seen(t.size());
        for (int w : c->image) {
            if (w < 0 || w >= t.size() || seen.contains(w)) return fail("critical image is not a bijection");
            seen.insert(w);
        }
        Tournament family = gen_family(Family::T, c->n);
        for (int i = 0; i < c->n; ++i)
            for (int j = i + 1; j < c->n; ++j)
                if (family.edge(i, j) != t.edge(c->image[static_cast<std::size_t>(i)],
                                                c->image[static_cast<std::size_t>(j)]))
                    return fail("critical image is not an isomorphism onto the circular tournament");
        return CertCheck{true, {}};
    }
    if (const auto* p = cert.as_partition()) {
        if (!verify_triangle_partition(t, p->partition)) {
            // locate a violated pair for the diagnostic
            for (const auto* pair : {&p->partition.x, &p->partition.y, &p->partition.z}) {
                for (std::size_t i = 0; i < pair->seq.size(); ++i)
                    for (std::size_t j = i + 1; j < pair->seq.size(); ++j)
                        if (pair->seq[i] >= 0 && pair->seq[j] >= 0 && pair->seq[i] < t.size() &&
                            pair->seq[j] < t.size() && !t.edge(pair->seq[i], pair->seq[j]))
                            return fail("partition order violated at pair (" + std::to_string(pair->seq[i]) +
                                        "," + std::to_string(pair->seq[j]) + ")");
            }
            return fail("partition invalid (coverage or union transitivity)");
        }
        return CertCheck{true, {}};
    }
    return verify_composite(t, *cert.as_composite());
}

} // namespace u5
