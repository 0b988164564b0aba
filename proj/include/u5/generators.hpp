#pragma once

#include <cstdint>
#include <vector>

#include "u5/core.hpp"

namespace u5 {

enum class Family { T, U, W, P, I, Q7, ExtremalG };

/// A named family instance. T/U/W require odd n >= 1; Q7 takes no parameter;
/// ExtremalG's parameter is the iteration depth k >= 1 (3^k vertices).
struct FamilySpec {
    Family kind;
    int n = 0;
};

/// Builds the named family member. Vertex labels follow the defining
/// 1-based presentations shifted down by one; for W the apex is vertex 0 and
/// the chain occupies 1..n-1.
Tournament gen_family(const FamilySpec& spec);

Tournament gen_family(Family kind, int n);

/// Result of substituting factor tournaments into the vertices of a quotient:
/// block i occupies a contiguous label range and induces factors[i]; between
/// blocks, edges follow the quotient.
struct Composition {
    Tournament tour;
    std::vector<VertexSet> blocks; // blocks[i] in tour labels, one per quotient vertex
};

/// Requires factors.size() == quotient.size() and every factor non-empty.
Composition compose(const Tournament& quotient, const std::vector<Tournament>& factors);

/// G_1 = T3, G_{k+1} = T3(G_k, G_k, G_k). 3^k vertices, U5-free, and no
/// transitive subtournament larger than 2^k.
Tournament gen_extremal(int k);

/// Uniform random orientation of each pair, decided by one splitmix64 draw
/// per pair so the result is reproducible across platforms for a fixed seed.
/// Pair (u, v), u < v, with lexicographic rank r uses the top bit of
/// splitmix64_at(seed, r).
Tournament gen_random(int n, std::uint64_t seed);

/// Random U5-free tournament with exactly target_n (>= 1) vertices, built by
/// recursive substitution whose quotients are drawn from the U5-free prime
/// families (T_m, W_m, P_m with m != 4, plus the 2-vertex tournament as a
/// degenerate base). Deterministic for a fixed seed.
Tournament gen_random_u5free(int target_n, std::uint64_t seed);

/// The one-draw splitmix64 stream: value at index i for a given seed.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

} // namespace u5
