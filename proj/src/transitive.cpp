#include "u5/transitive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace u5 {

// --- exact gamma comparisons --------------------------------------------------

namespace {

/// Two-sided rational bracket around log2(3), tightened by mediants with
/// exact integer power comparisons.
struct Log23Bracket {
    unsigned lo_p = 1, lo_q = 1; // lo_p/lo_q < log2(3)
    unsigned hi_p = 2, hi_q = 1; // hi_p/hi_q > log2(3)

    void tighten() {
        unsigned p = lo_p + hi_p, q = lo_q + hi_q;
        if (BigNat::pow_u64(2, p) < BigNat::pow_u64(3, q)) {
            lo_p = p;
            lo_q = q;
        } else {
            hi_p = p;
            hi_q = q;
        }
    }
};

bool is_exact_pair(long long size, long long n) {
    // size = 2^k and n = 3^k for the same k
    if (size < 1 || n < 1) return false;
    long long s = size, m = n;
    while (s % 2 == 0 && m % 3 == 0) {
        s /= 2;
        m /= 3;
    }
    return s == 1 && m == 1;
}

} // namespace

GammaVerdict gamma_compare(long long size, long long n) {
    if (size < 1 || n < 1) throw ContractViolation("gamma_compare requires positive integers");
    if (is_exact_pair(size, n)) return GammaVerdict::Equal;
    if (size == 1) return GammaVerdict::Below; // n >= 2 here
    if (n == 1) return GammaVerdict::Above;

    // size >= n^gamma  <=>  size^log2(3) >= n
    Log23Bracket br;
    for (int iter = 0; iter < 4000; ++iter) {
        BigNat s_lo = BigNat::pow_u64(static_cast<std::uint64_t>(size), br.lo_p);
        BigNat n_lo = BigNat::pow_u64(static_cast<std::uint64_t>(n), br.lo_q);
        if (!(s_lo < n_lo)) return GammaVerdict::Above;
        BigNat s_hi = BigNat::pow_u64(static_cast<std::uint64_t>(size), br.hi_p);
        BigNat n_hi = BigNat::pow_u64(static_cast<std::uint64_t>(n), br.hi_q);
        if (s_hi <= n_hi) return GammaVerdict::Below;
        br.tighten();
    }
    throw InternalInvariantViolation("gamma comparison failed to converge");
}

std::optional<long long> GammaBound::exact_value() const {
    long long m = n, k = 0;
    if (m < 1) return std::nullopt;
    while (m % 3 == 0) {
        m /= 3;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return 1LL << k;
}

double GammaBound::approx() const {
    return std::pow(static_cast<double>(n), std::log(2.0) / std::log(3.0));
}

std::string GammaBound::decimal(int significant) const {
    long double v = std::pow(static_cast<long double>(n),
                             std::log(2.0L) / std::log(3.0L));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", significant, v);
    return buf;
}

// --- weighted solver -----------------------------------------------------------

namespace {

struct BnbState {
    const Tournament* q;
    const std::vector<long long>* w;
    std::vector<int> order;
    VertexSet best_set;
    long long best = -1;
};

long long weight_of(const BnbState& st, const VertexSet& s) {
    long long total = 0;
    for (int v = s.first(); v != -1; v = s.next(v)) total += (*st.w)[static_cast<std::size_t>(v)];
    return total;
}

// vertices of `cand` that stay transitive-compatible once v joins `chosen`;
// the only new triangles are {u, v, c} with c already chosen
VertexSet filter_candidates(const Tournament& q, const VertexSet& cand, const VertexSet& chosen, int v) {
    VertexSet out = cand;
    out.erase(v);
    for (int u = out.first(); u != -1; u = out.next(u)) {
        VertexSet bad = q.edge(v, u) ? (q.successors(u) & q.predecessors(v))
                                     : (q.successors(v) & q.predecessors(u));
        if (bad.intersects(chosen)) out.erase(u);
    }
    return out;
}

void bnb(BnbState& st, int pos, VertexSet chosen, VertexSet cand, long long weight) {
    if (weight > st.best) {
        st.best = weight;
        st.best_set = chosen;
    }
    if (weight + weight_of(st, cand) <= st.best) return;
    int n = static_cast<int>(st.order.size());
    int next = -1;
    for (int p = pos; p < n; ++p)
        if (cand.contains(st.order[static_cast<std::size_t>(p)])) {
            next = p;
            break;
        }
    if (next == -1) return;
    int v = st.order[static_cast<std::size_t>(next)];
    // include v
    VertexSet chosen2 = chosen;
    chosen2.insert(v);
    bnb(st, next + 1, chosen2, filter_candidates(*st.q, cand, chosen, v),
        weight + (*st.w)[static_cast<std::size_t>(v)]);
    // exclude v
    VertexSet cand2 = cand;
    cand2.erase(v);
    bnb(st, next + 1, chosen, cand2, weight);
}

} // namespace

VertexSet max_transitive_weighted(const Tournament& q, const std::vector<long long>& weights) {
    int n = q.size();
    if (static_cast<int>(weights.size()) != n)
        throw ContractViolation("one weight per quotient vertex required");
    for (long long w : weights)
        if (w < 1) throw ContractViolation("weights must be positive");
    if (n == 0) return VertexSet(0);
    BnbState st;
    st.q = &q;
    st.w = &weights;
    st.order.resize(static_cast<std::size_t>(n));
    std::iota(st.order.begin(), st.order.end(), 0);
    std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        if (weights[static_cast<std::size_t>(a)] != weights[static_cast<std::size_t>(b)])
            return weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)];
        int da = q.out_degree(a), db = q.out_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    st.best_set = VertexSet(n);
    bnb(st, 0, VertexSet(n), VertexSet::full(n), 0);
    return st.best_set;
}

VertexSet max_transitive_weighted(const WeightedQuotientInstance& instance) {
    return max_transitive_weighted(instance.quotient, instance.weights);
}

// --- exact maximum -------------------------------------------------------------

namespace {

VertexSet solve_exact(const Tournament& tour, const DecompositionTree& node) {
    if (node.is_leaf()) return VertexSet::of(1, {0});
    std::vector<VertexSet> lifted;
    std::vector<long long> weights;
    lifted.reserve(node.blocks.size());
    for (std::size_t i = 0; i < node.blocks.size(); ++i) {
        Induced ind = induced(tour, node.blocks[i]);
        VertexSet sub = solve_exact(ind.tour, node.children[i]);
        VertexSet host(tour.size());
        for (int v = sub.first(); v != -1; v = sub.next(v))
            host.insert(ind.to_host[static_cast<std::size_t>(v)]);
        weights.push_back(host.count());
        lifted.push_back(std::move(host));
    }
    VertexSet sel = max_transitive_weighted(node.quotient, weights);
    VertexSet result(tour.size());
    for (int i = sel.first(); i != -1; i = sel.next(i)) result |= lifted[static_cast<std::size_t>(i)];
    return result;
}

} // namespace

VertexSet max_transitive_exact(const Tournament& t) {
    if (t.size() == 0) return VertexSet(0);
    DecompositionTree tree = substitution_decomposition(t);
    VertexSet result = solve_exact(t, tree);
    if (!is_transitive(induced(t, result).tour))
        throw InternalInvariantViolation("exact solver produced a non-transitive set");
    return result;
}

// --- constructive lower bound ----------------------------------------------------

namespace {

/// Union of the two heaviest of three weighted groups (ties resolved by
/// dropping z, then y, then x), as indices 0/1/2 of the kept groups.
std::pair<int, int> keep_two(long long wx, long long wy, long long wz) {
    long long mn = std::min({wx, wy, wz});
    if (wz == mn) return {0, 1};
    if (wy == mn) return {0, 2};
    return {1, 2};
}

VertexSet lb_set(const Tournament& tour, const Certificate& cert);

VertexSet lb_composite(const Tournament& tour, const CompositeCert& comp) {
    int n = tour.size();
    std::vector<VertexSet> lifted;
    std::vector<long long> block_size;
    lifted.reserve(comp.blocks.size());
    for (std::size_t i = 0; i < comp.blocks.size(); ++i) {
        Induced ind = induced(tour, comp.blocks[i]);
        VertexSet sub = lb_set(ind.tour, comp.block_certs[i]);
        VertexSet host(n);
        for (int v = sub.first(); v != -1; v = sub.next(v))
            host.insert(ind.to_host[static_cast<std::size_t>(v)]);
        lifted.push_back(std::move(host));
        block_size.push_back(comp.blocks[i].count());
    }
    const Certificate& qc = *comp.quotient_cert;
    VertexSet chosen_blocks(static_cast<int>(comp.blocks.size()));
    if (const auto* p = qc.as_partition()) {
        long long wx = 0, wy = 0, wz = 0;
        for (int v : p->partition.x.seq) wx += block_size[static_cast<std::size_t>(v)];
        for (int v : p->partition.y.seq) wy += block_size[static_cast<std::size_t>(v)];
        for (int v : p->partition.z.seq) wz += block_size[static_cast<std::size_t>(v)];
        auto [k1, k2] = keep_two(wx, wy, wz);
        const TransitiveOrder* parts[3] = {&p->partition.x, &p->partition.y, &p->partition.z};
        for (int v : parts[k1]->seq) chosen_blocks.insert(v);
        for (int v : parts[k2]->seq) chosen_blocks.insert(v);
    } else if (const auto* c = qc.as_critical()) {
        int m = c->n, h = (m - 1) / 2;
        auto wslot = [&](int slot) {
            return block_size[static_cast<std::size_t>(c->image[static_cast<std::size_t>(slot)])];
        };
        int r = 0;
        for (int slot = 1; slot < m; ++slot)
            if (wslot(slot) > wslot(r)) r = slot;
        long long fwd = 0, bwd = 0;
        for (int d = 1; d <= h; ++d) {
            fwd += wslot((r + d) % m);
            bwd += wslot((r - d + m) % m);
        }
        for (int d = 0; d <= h; ++d) {
            int slot = fwd >= bwd ? (r + d) % m : (r - d + m) % m;
            chosen_blocks.insert(c->image[static_cast<std::size_t>(slot)]);
        }
    } else {
        throw ContractViolation("unsupported quotient certificate shape for the bound");
    }
    VertexSet result(n);
    for (int i = chosen_blocks.first(); i != -1; i = chosen_blocks.next(i))
        result |= lifted[static_cast<std::size_t>(i)];
    return result;
}

VertexSet lb_set(const Tournament& tour, const Certificate& cert) {
    int n = tour.size();
    VertexSet result(n);
    if (const auto* p = cert.as_partition()) {
        auto [k1, k2] = keep_two(p->partition.x.size(), p->partition.y.size(), p->partition.z.size());
        const TransitiveOrder* parts[3] = {&p->partition.x, &p->partition.y, &p->partition.z};
        for (int v : parts[k1]->seq) result.insert(v);
        for (int v : parts[k2]->seq) result.insert(v);
    } else if (const auto* c = cert.as_critical()) {
        // the dominant half v_1..v_{(m+1)/2} of the circular tournament
        int h = (c->n - 1) / 2;
        for (int slot = 0; slot <= h; ++slot) result.insert(c->image[static_cast<std::size_t>(slot)]);
    } else if (const auto* comp = cert.as_composite()) {
        result = lb_composite(tour, *comp);
    } else {
        throw ContractViolation("forbidden-copy certificate cannot drive the bound");
    }
    if (n > 0 && gamma_compare(result.count(), n) == GammaVerdict::Below)
        throw InternalInvariantViolation("constructed set fell below the bound");
    return result;
}

} // namespace

VertexSet u5free_lower_bound_set(const Tournament& t, const Certificate& freeness) {
    if (!freeness.certifies_free())
        throw ContractViolation("the bound requires a freeness certificate, not a forbidden copy");
    CertCheck ck = verify_certificate(t, freeness);
    if (!ck.valid) throw ContractViolation("certificate does not validate against the input: " + ck.reason);
    if (t.size() == 0) return VertexSet(0);
    VertexSet result = lb_set(t, freeness);
    if (!is_transitive(induced(t, result).tour))
        throw InternalInvariantViolation("lower-bound set is not transitive");
    if (gamma_compare(result.count(), t.size()) == GammaVerdict::Below)
        throw InternalInvariantViolation("lower-bound set misses the threshold");
    return result;
}

// --- inequality utilities ---------------------------------------------------------

KaramataOutcome karamata_check(const std::vector<double>& xs, const std::vector<double>& ys,
                               double exponent) {
    if (xs.size() != ys.size()) throw InputError("sequences must have equal length");
    if (!(exponent > 0.0 && exponent < 1.0)) throw InputError("exponent must lie in (0,1)");
    double total_x = 0, total_y = 0, scale = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0 || ys[i] < 0) return KaramataOutcome::PreconditionsViolated;
        if (i + 1 < xs.size() && (xs[i] < xs[i + 1] || ys[i] < ys[i + 1]))
            return KaramataOutcome::PreconditionsViolated;
        total_x += xs[i];
        total_y += ys[i];
        scale = std::max({scale, xs[i], ys[i]});
    }
    const double eps = 1e-9 * scale * static_cast<double>(xs.size() + 1);
    double prefix_x = 0, prefix_y = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        prefix_x += xs[i];
        prefix_y += ys[i];
        if (prefix_x > prefix_y + eps) return KaramataOutcome::PreconditionsViolated;
    }
    if (std::abs(total_x - total_y) > eps) return KaramataOutcome::PreconditionsViolated;

    double lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        lhs += std::pow(xs[i], exponent);
        rhs += std::pow(ys[i], exponent);
    }
    return lhs >= rhs - 1e-9 * (std::abs(lhs) + std::abs(rhs) + 1) ? KaramataOutcome::Holds
                                                                   : KaramataOutcome::Fails;
}

namespace {

/// Exact dyadic decomposition of a nonnegative double: value = mant * 2^exp2.
struct Dyadic {
    std::uint64_t mant = 0;
    int exp2 = 0;
};

Dyadic decompose(double v) {
    if (v == 0.0) return {0, 0};
    int e = 0;
    double m = std::frexp(v, &e); // v = m * 2^e, m in [0.5, 1)
    std::uint64_t mant = static_cast<std::uint64_t>(std::ldexp(m, 60));
    int exp2 = e - 60;
    while (mant && (mant & 1) == 0) {
        mant >>= 1;
        ++exp2;
    }
    return {mant, exp2};
}

/// [lo, hi] / 2^prec bracket of x^gamma for an integer x, using the current
/// rational bracket of gamma = 1 / log2(3).
struct PowBracket {
    BigNat lo, hi;
};

PowBracket pow_gamma_bracket(const BigNat& x, const Log23Bracket& br, unsigned prec) {
    // gamma in (lo_q/hi_p-side): 1/log2(3) lies between hi_q/hi_p and lo_q/lo_p
    // x >= 1: x^(q/p) is monotone in q/p
    PowBracket out;
    if (x.is_zero()) {
        out.lo = BigNat(0);
        out.hi = BigNat(0);
        return out;
    }
    // lower: exponent hi_q/hi_p (the smaller rational), rounded down
    BigNat lo_base = BigNat::pow(x, br.hi_q).shifted_left(prec * br.hi_p);
    out.lo = lo_base.iroot(br.hi_p);
    // upper: exponent lo_q/lo_p (the larger rational), rounded up
    BigNat hi_base = BigNat::pow(x, br.lo_q).shifted_left(prec * br.lo_p);
    out.hi = hi_base.iroot(br.lo_p);
    out.hi += 1;
    return out;
}

} // namespace

bool two_of_three_check(double a, double b, double c) {
    if (!(a >= 0) || !(b >= 0) || !(c >= 0)) throw InputError("inputs must be nonnegative reals");
    if (c > a || c > b) throw ContractViolation("c must be the minimum of (a, b, c)");
    // symbolic equality cases
    if (a == b && b == c) return true;           // 2*a^g = (3a)^g
    if (c == 0 && (a == 0 || b == 0)) return true; // max^g on both sides

    // scale-invariant: rewrite the three reals as exact integers
    Dyadic da = decompose(a), db = decompose(b), dc = decompose(c);
    int emin = std::min({da.exp2, db.exp2, dc.exp2});
    auto lift = [&](const Dyadic& d) {
        BigNat v(d.mant);
        return d.mant ? v.shifted_left(static_cast<unsigned>(d.exp2 - emin)) : BigNat(0);
    };
    BigNat ia = lift(da), ib = lift(db), ic = lift(dc);
    BigNat in = ia + ib + ic;

    Log23Bracket br;
    for (unsigned prec = 16; prec <= (1u << 14); prec *= 2) {
        PowBracket pa = pow_gamma_bracket(ia, br, prec);
        PowBracket pb = pow_gamma_bracket(ib, br, prec);
        PowBracket pn = pow_gamma_bracket(in, br, prec);
        BigNat lhs_lo = pa.lo + pb.lo;
        BigNat lhs_hi = pa.hi + pb.hi;
        if (!(lhs_lo < pn.hi)) return true;  // lhs_lo >= rhs_hi
        if (lhs_hi < pn.lo) return false;
        for (int i = 0; i < 4; ++i) br.tighten();
    }
    throw InternalInvariantViolation("interval comparison failed to converge");
}

} // namespace u5
