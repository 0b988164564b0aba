#include "u5/generators.hpp"

#include <algorithm>
#include <string>

namespace u5 {

namespace {

void require_odd_positive(Family kind, int n) {
    const char* name = kind == Family::T ? "T" : kind == Family::U ? "U" : "W";
    if (n < 1 || n % 2 == 0)
        throw InputError(std::string(name) + "_n requires odd n >= 1, got n=" + std::to_string(n));
}

Tournament gen_circular(int n) {
    int half = (n - 1) / 2;
    return Tournament(n, [&](int u, int v) {
        int d = (v - u) % n;
        if (d < 0) d += n;
        return d >= 1 && d <= half;
    });
}

} // namespace

Tournament gen_family(const FamilySpec& spec) { return gen_family(spec.kind, spec.n); }

Tournament gen_family(Family kind, int n) {
    switch (kind) {
    case Family::T: {
        require_odd_positive(kind, n);
        return gen_circular(n);
    }
    case Family::U: {
        require_odd_positive(kind, n);
        int half = (n - 1) / 2;
        Tournament t = gen_circular(n);
        // reverse every edge with both ends among the first (n-1)/2 vertices
        return Tournament(n, [&](int u, int v) {
            bool fwd = t.edge(u, v);
            return (u < half && v < half) ? !fwd : fwd;
        });
    }
    case Family::W: {
        require_odd_positive(kind, n);
        // apex = 0; chain w_1..w_{n-1} = 1..n-1; even-indexed chain vertices
        // beat the apex, the apex beats odd-indexed ones
        return Tournament(n, [&](int u, int v) {
            if (u == 0) return v % 2 == 1;
            return u < v;
        });
    }
    case Family::P: {
        if (n < 0) throw InputError("P_n requires n >= 0");
        return Tournament(n, [&](int u, int v) { return v - u >= 2; });
    }
    case Family::I: {
        if (n < 0) throw InputError("I_n requires n >= 0");
        return Tournament(n, [](int, int) { return true; });
    }
    case Family::Q7: {
        return Tournament(7, [](int u, int v) {
            int d = (v - u) % 7;
            if (d < 0) d += 7;
            return d == 1 || d == 2 || d == 4;
        });
    }
    case Family::ExtremalG:
        return gen_extremal(n);
    }
    throw InputError("unknown family");
}

Composition compose(const Tournament& quotient, const std::vector<Tournament>& factors) {
    int m = quotient.size();
    if (static_cast<int>(factors.size()) != m)
        throw InputError("compose: expected " + std::to_string(m) + " factors, got " +
                         std::to_string(factors.size()));
    std::vector<int> offset(factors.size() + 1, 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].size() == 0)
            throw InputError("compose: factor " + std::to_string(i) + " is empty");
        offset[i + 1] = offset[i] + factors[i].size();
    }
    int total = offset.back();
    std::vector<int> block_of(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (int v = offset[i]; v < offset[i + 1]; ++v) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

    Tournament t(total, [&](int u, int v) {
        int bu = block_of[static_cast<std::size_t>(u)], bv = block_of[static_cast<std::size_t>(v)];
        if (bu == bv)
            return factors[static_cast<std::size_t>(bu)].edge(u - offset[static_cast<std::size_t>(bu)],
                                                              v - offset[static_cast<std::size_t>(bv)]);
        return quotient.edge(bu, bv);
    });
    std::vector<VertexSet> blocks;
    blocks.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        VertexSet b(total);
        for (int v = offset[i]; v < offset[i + 1]; ++v) b.insert(v);
        blocks.push_back(std::move(b));
    }
    return Composition{std::move(t), std::move(blocks)};
}

Tournament gen_extremal(int k) {
    if (k < 1) throw InputError("extremal family requires k >= 1, got k=" + std::to_string(k));
    Tournament g = gen_family(Family::T, 3);
    Tournament t3 = g;
    for (int i = 1; i < k; ++i) g = compose(t3, {g, g, g}).tour;
    return g;
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Tournament gen_random(int n, std::uint64_t seed) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    return Tournament(n, [&](int u, int v) {
        // lexicographic rank of (u, v) among ordered pairs u < v
        std::uint64_t rank = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) -
                             static_cast<std::uint64_t>(u) * (static_cast<std::uint64_t>(u) + 1) / 2 +
                             static_cast<std::uint64_t>(v - u - 1);
        return (splitmix64_at(seed, rank) >> 63) != 0;
    });
}

namespace {

struct SeededStream {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    std::uint64_t next() { return splitmix64_at(seed, counter++); }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

constexpr int kQuotientCap = 13;

Tournament build_u5free(int target, SeededStream& rng) {
    if (target <= 2) return gen_family(Family::I, target);
    // quotient candidates: the U5-free prime families of size <= min(target, cap)
    std::vector<FamilySpec> candidates;
    int cap = std::min(target, kQuotientCap);
    for (int m = 3; m <= cap; ++m) {
        if (m % 2 == 1) {
            candidates.push_back({Family::T, m});
            candidates.push_back({Family::W, m});
        }
        if (m != 4) candidates.push_back({Family::P, m});
    }
    FamilySpec spec = candidates[static_cast<std::size_t>(rng.below(static_cast<int>(candidates.size())))];
    int m = spec.n;
    std::vector<int> sizes(static_cast<std::size_t>(m), 1);
    for (int extra = target - m; extra > 0; --extra) ++sizes[static_cast<std::size_t>(rng.below(m))];
    std::vector<Tournament> children;
    children.reserve(sizes.size());
    for (int s : sizes) children.push_back(build_u5free(s, rng));
    return compose(gen_family(spec), children).tour;
}

} // namespace

Tournament gen_random_u5free(int target_n, std::uint64_t seed) {
    if (target_n < 1) throw InputError("target size must be >= 1");
    SeededStream rng{seed};
    return build_u5free(target_n, rng);
}

} // namespace u5
