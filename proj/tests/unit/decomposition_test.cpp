#include <doctest.h>

#include "fixtures.hpp"
#include "u5/decomposition.hpp"
#include "u5/detection.hpp"

using namespace u5;
using namespace u5::test;

namespace {

// brute-force homogeneous-set existence over all nontrivial subsets
bool brute_has_module(const Tournament& t) {
    int n = t.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int bits = __builtin_popcountll(mask);
        if (bits < 2 || bits >= n) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.insert(v);
        if (is_homogeneous_set(t, s)) return true;
    }
    return false;
}

void check_tree(const Tournament& tour, const DecompositionTree& node) {
    if (node.is_leaf()) {
        CHECK(tour.size() == 1);
        return;
    }
    CHECK(node.quotient.size() == static_cast<int>(node.blocks.size()));
    CHECK(node.quotient.size() > 1);
    // dichotomy: linear base or prime quotient
    if (node.linear)
        CHECK(strong_components(tour).size() == node.blocks.size());
    else
        CHECK(is_prime(node.quotient));
    VertexSet seen(tour.size());
    for (const auto& b : node.blocks) {
        CHECK(is_homogeneous_set(tour, b));
        CHECK_FALSE((b & seen).any());
        seen |= b;
    }
    CHECK(seen == VertexSet::full(tour.size()));
    // maximality at prime-quotient nodes: no block absorbs a sibling vertex
    if (!node.linear) {
        for (const auto& b : node.blocks)
            for (int w = 0; w < tour.size(); ++w) {
                if (b.contains(w)) continue;
                VertexSet grown = b;
                grown.insert(w);
                CHECK_FALSE(is_homogeneous_set(tour, grown));
            }
    }
    for (std::size_t i = 0; i < node.blocks.size(); ++i)
        check_tree(induced(tour, node.blocks[i]).tour, node.children[i]);
}

} // namespace

TEST_CASE("nontrivial homogeneous sets") {
    CHECK_FALSE(find_nontrivial_homogeneous_set(gen_family(Family::T, 5)).has_value());

    Tournament t3 = gen_family(Family::T, 3);
    Tournament comp = compose(t3, {gen_family(Family::I, 2), gen_family(Family::I, 1),
                                   gen_family(Family::I, 1)})
                          .tour;
    auto found = find_nontrivial_homogeneous_set(comp);
    REQUIRE(found.has_value());
    CHECK(is_homogeneous_set(comp, *found));
    CHECK(found->count() >= 2);
    CHECK(found->count() < comp.size());

    // six-vertex extension of T5 whose added vertex loses exactly to two
    // consecutive circle vertices: a module must appear
    Tournament t5 = gen_family(Family::T, 5);
    Tournament h(6, [&](int u, int v) {
        if (v == 5) return u == 1 || u == 2;
        return t5.edge(u, v);
    });
    auto module = find_nontrivial_homogeneous_set(h);
    REQUIRE(module.has_value());
    CHECK(is_homogeneous_set(h, *module));
}

TEST_CASE("homogeneous-set detection agrees with subset brute force") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_tournaments(n))
            CHECK(find_nontrivial_homogeneous_set(t).has_value() == brute_has_module(t));
}

TEST_CASE("primality basics") {
    CHECK(is_prime(Tournament{}));
    CHECK(is_prime(gen_family(Family::I, 1)));
    CHECK(is_prime(gen_family(Family::I, 2)));

    int primes4 = 0;
    for (const auto& t : enumerate_tournaments(4))
        if (is_prime(t)) ++primes4;
    CHECK(primes4 == 0);

    int primes5 = 0;
    for (const auto& t : enumerate_tournaments(5))
        if (is_prime(t)) ++primes5;
    CHECK(primes5 == 3);
}

TEST_CASE("quotient contraction") {
    Tournament t3 = gen_family(Family::T, 3);
    Tournament a = gen_random(4, 1), b = gen_random(2, 2), c = gen_random(3, 3);
    Composition comp = compose(t3, {a, b, c});

    VertexSet singleton = VertexSet::of(comp.tour.size(), {4});
    CHECK(are_isomorphic(quotient(comp.tour, singleton), comp.tour).has_value());

    Tournament q = quotient(comp.tour, comp.blocks[0]);
    CHECK(q.size() == 1 + b.size() + c.size());

    VertexSet not_module = VertexSet::of(comp.tour.size(), {0, 5});
    CHECK_THROWS_AS(quotient(comp.tour, not_module), ContractViolation);
    CHECK_THROWS_AS(quotient(comp.tour, VertexSet(comp.tour.size())), ContractViolation);

    // pattern-freeness splits across quotient and factor
    Tournament u5 = gen_family(Family::U, 5);
    Tournament with_u5 = compose(t3, {u5, gen_family(Family::I, 1), gen_family(Family::I, 1)}).tour;
    CHECK_FALSE(is_pattern_free(with_u5, u5));
    CHECK(is_pattern_free(quotient(with_u5, VertexSet::of(7, {0, 1, 2, 3, 4})), u5));
    CHECK_FALSE(is_pattern_free(induced(with_u5, VertexSet::of(7, {0, 1, 2, 3, 4})).tour, u5));
}

TEST_CASE("decomposition tree shapes") {
    Tournament t5 = gen_family(Family::T, 5);
    DecompositionTree prime_tree = substitution_decomposition(t5);
    CHECK_FALSE(prime_tree.linear);
    CHECK(prime_tree.blocks.size() == 5);
    CHECK(prime_tree.quotient == t5);

    DecompositionTree i4 = substitution_decomposition(gen_family(Family::I, 4));
    CHECK(i4.linear);
    CHECK(i4.blocks.size() == 4);

    DecompositionTree g2 = substitution_decomposition(gen_extremal(2));
    CHECK_FALSE(g2.linear);
    REQUIRE(g2.blocks.size() == 3);
    CHECK(are_isomorphic(g2.quotient, gen_family(Family::T, 3)).has_value());
    for (const auto& child : g2.children) {
        CHECK(child.n == 3);
        CHECK(are_isomorphic(child.quotient, gen_family(Family::T, 3)).has_value());
    }
}

TEST_CASE("decomposition invariants and recomposition round-trip") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 1 + static_cast<int>(seed % 12);
        Tournament t = gen_random(n, seed);
        DecompositionTree tree = substitution_decomposition(t);
        CHECK(recompose(tree) == t);
        if (seed < 60) check_tree(t, tree);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tournament t = gen_random_u5free(30, seed);
        CHECK(recompose(substitution_decomposition(t)) == t);
    }
}
