#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "u5/core.hpp"

namespace u5 {

/// Witness that `host` contains `pattern`: image[i] is the host vertex
/// playing pattern vertex i, orientation preserved.
struct Embedding {
    std::vector<int> image;
};

/// First embedding of `pattern` into `host` in deterministic scan order
/// (lexicographic over vertex subsets, then over bijections), or absent.
/// Pattern automorphisms are quotiented out of the bijection scan; the
/// returned witness is re-verified by direct scan. Intended for patterns
/// with at most five vertices.
std::optional<Embedding> find_embedding(const Tournament& host, const Tournament& pattern);

bool is_pattern_free(const Tournament& host, const Tournament& pattern);

/// True iff `emb` maps `pattern` into `host` injectively preserving edges.
bool verify_embedding(const Tournament& host, const Tournament& pattern, const Embedding& emb);

/// Canonical code: the lexicographically least adjacency bit-string over all
/// vertex orderings. Bits are grouped by the later vertex (pairs (0,1),
/// (0,2), (1,2), (0,3), ...), most significant first, each bit set when the
/// earlier vertex beats the later one. Requires n <= 8.
std::uint64_t canonical_code(const Tournament& t);

/// Same value computed by the plain all-permutations scan; cross-check twin
/// of canonical_code.
std::uint64_t canonical_code_bruteforce(const Tournament& t);

/// Rebuilds the representative tournament from a canonical code.
Tournament tournament_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class, ordered by canonical code.
/// n <= 7 by default; n = 8 only with the explicit opt-in (and nothing
/// larger). Counts for n = 1..7 are 1, 1, 2, 4, 12, 56, 456.
std::vector<Tournament> enumerate_tournaments(int n, bool opt_in_n8 = false);

/// Index set inside gen_family(U, n) (odd n >= 5) inducing the five-vertex
/// pattern U5, derived by iterated deletion; verified by the caller.
std::vector<int> u5_witness_in_un(int n);

} // namespace u5
