#pragma once

#include <utility>
#include <vector>

#include "u5/core.hpp"
#include "u5/generators.hpp"

namespace u5::test {

inline Tournament from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    return make_tournament(n, pairs);
}

// The three five-vertex prime tournaments, written out as explicit winner
// lists from their defining presentations (0-based labels).
inline Tournament t5_explicit() {
    return from_pairs(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 0}, {4, 0}, {4, 1}});
}

inline Tournament u5_explicit() {
    return from_pairs(5, {{1, 0}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 0}, {4, 0}, {4, 1}});
}

inline Tournament w5_explicit() {
    return from_pairs(5, {{1, 0}, {0, 2}, {1, 2}, {1, 3}, {3, 2}, {2, 4}, {3, 4}, {3, 0}, {4, 0}, {4, 1}});
}

// U5 in its alternative presentation: u_i -> u_j for i < j unless both are
// odd positions, in which case the edge reverses.
inline Tournament u5_alternative() {
    return Tournament(5, [](int i, int j) {
        bool both_odd = (i % 2 == 0) && (j % 2 == 0); // 0-based: positions 1,3,5
        return !both_odd;
    });
}

inline std::vector<int> degree_multiset(const Tournament& t) {
    std::vector<int> degs;
    for (int v = 0; v < t.size(); ++v) degs.push_back(t.out_degree(v));
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace u5::test
