#include "u5/detection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace u5 {

bool verify_embedding(const Tournament& host, const Tournament& pattern, const Embedding& emb) {
    int k = pattern.size();
    if (static_cast<int>(emb.image.size()) != k) return false;
    VertexSet seen(host.size());
    for (int v : emb.image) {
        if (v < 0 || v >= host.size() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (pattern.edge(i, j) != host.edge(emb.image[static_cast<std::size_t>(i)],
                                                emb.image[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

namespace {

std::vector<std::vector<int>> automorphisms(const Tournament& t) {
    int n = t.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                ok = t.edge(i, j) == t.edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

// Lexicographically next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Embedding> find_embedding(const Tournament& host, const Tournament& pattern) {
    int k = pattern.size();
    int n = host.size();
    if (k > n) return std::nullopt;
    if (k == 0) return Embedding{{}};

    std::vector<int> pat_degs;
    for (int v = 0; v < k; ++v) pat_degs.push_back(pattern.out_degree(v));
    std::vector<int> pat_degs_sorted = pat_degs;
    std::sort(pat_degs_sorted.begin(), pat_degs_sorted.end());

    const auto autos = automorphisms(pattern);

    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<int> perm(static_cast<std::size_t>(k));
    do {
        // degree multiset prefilter on the induced subtournament
        std::vector<int> degs(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && host.edge(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]))
                    ++degs[static_cast<std::size_t>(i)];
        std::vector<int> ds = degs;
        std::sort(ds.begin(), ds.end());
        if (ds != pat_degs_sorted) continue;

        std::iota(perm.begin(), perm.end(), 0);
        do {
            // only try the least representative of each coset under Aut(pattern)
            bool least = true;
            for (const auto& a : autos) {
                for (int i = 0; i < k; ++i) {
                    int lhs = perm[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
                    int rhs = perm[static_cast<std::size_t>(i)];
                    if (lhs != rhs) {
                        if (lhs < rhs) least = false;
                        break;
                    }
                }
                if (!least) break;
            }
            if (!least) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if (degs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] != pat_degs[static_cast<std::size_t>(i)]) { ok = false; break; }
                for (int j = i + 1; j < k && ok; ++j)
                    ok = pattern.edge(i, j) ==
                         host.edge(subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                   subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
            }
            if (ok) {
                Embedding emb;
                emb.image.resize(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    emb.image[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                if (!verify_embedding(host, pattern, emb))
                    throw InternalInvariantViolation("embedding failed re-verification");
                return emb;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_combination(subset, n));
    return std::nullopt;
}

bool is_pattern_free(const Tournament& host, const Tournament& pattern) {
    return !find_embedding(host, pattern).has_value();
}

namespace {

int pair_bit_position(int i, int j) { return j * (j - 1) / 2 + i; } // i < j

struct CanonState {
    const Tournament* t;
    int n;
    int total_bits;
    std::uint64_t best;
    std::vector<int> chosen;
    std::vector<char> used;
};

void canon_dfs(CanonState& st, std::uint64_t code, int bits) {
    int depth = static_cast<int>(st.chosen.size());
    if (depth == st.n) {
        if (code < st.best) st.best = code;
        return;
    }
    for (int w = 0; w < st.n; ++w) {
        if (st.used[static_cast<std::size_t>(w)]) continue;
        std::uint64_t col = 0;
        for (int i = 0; i < depth; ++i)
            col = (col << 1) | static_cast<std::uint64_t>(st.t->edge(st.chosen[static_cast<std::size_t>(i)], w));
        std::uint64_t code2 = (code << depth) | col;
        int bits2 = bits + depth;
        if (st.best >> (st.total_bits - bits2) < code2) continue; // prefix already worse
        st.chosen.push_back(w);
        st.used[static_cast<std::size_t>(w)] = 1;
        canon_dfs(st, code2, bits2);
        st.chosen.pop_back();
        st.used[static_cast<std::size_t>(w)] = 0;
    }
}

void check_canon_size(int n) {
    if (n > 8) throw ContractViolation("canonical codes support n <= 8, got n=" + std::to_string(n));
}

} // namespace

std::uint64_t canonical_code(const Tournament& t) {
    check_canon_size(t.size());
    if (t.size() <= 1) return 0;
    CanonState st{&t, t.size(), t.size() * (t.size() - 1) / 2, ~std::uint64_t{0}, {}, {}};
    st.used.assign(static_cast<std::size_t>(t.size()), 0);
    canon_dfs(st, 0, 0);
    return st.best;
}

std::uint64_t canonical_code_bruteforce(const Tournament& t) {
    check_canon_size(t.size());
    int n = t.size();
    if (n <= 1) return 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) |
                       static_cast<std::uint64_t>(t.edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Tournament tournament_from_code(int n, std::uint64_t code) {
    check_canon_size(n);
    int total = n * (n - 1) / 2;
    return Tournament(n, [&](int i, int j) {
        int pos = pair_bit_position(i, j);
        return (code >> (total - 1 - pos)) & 1u;
    });
}

std::vector<Tournament> enumerate_tournaments(int n, bool opt_in_n8) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (n > 8 || (n == 8 && !opt_in_n8))
        throw InputError("enumeration is limited to n <= 7 (n = 8 requires the explicit opt-in)");

    std::set<std::uint64_t> codes;
    if (n <= 6) {
        int total = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask)
            codes.insert(canonical_code(tournament_from_code(n, mask)));
    } else {
        // orderly augmentation: every class at n arises by adding one vertex
        // to some representative at n-1
        std::vector<Tournament> prev = enumerate_tournaments(n - 1, opt_in_n8);
        for (const auto& rep : prev) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Tournament ext(n, [&](int i, int j) {
                    if (j < n - 1) return rep.edge(i, j);
                    return ((mask >> i) & 1u) != 0;
                });
                codes.insert(canonical_code(ext));
            }
        }
    }
    std::vector<Tournament> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes) out.push_back(tournament_from_code(n, c));
    return out;
}

std::vector<int> u5_witness_in_un(int n) {
    if (n < 5 || n % 2 == 0)
        throw ContractViolation("U_n witness requires odd n >= 5");
    std::vector<int> idx{0, 1, 2, 3, 4};
    for (int m = 7; m <= n; m += 2) {
        // U_m minus vertices {0, (m-1)/2} is U_{m-2} under the ascending relabel
        int h = (m - 1) / 2;
        for (int& q : idx) q = (q <= h - 2) ? q + 1 : q + 2;
    }
    return idx;
}

} // namespace u5
