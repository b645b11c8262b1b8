#include "perron/digraph.hpp"

#include "perron/errors.hpp"
#include "perron/family.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace perron;
using perron::testing::float_spectral_radius;
using perron::testing::random_matrix;
using perron::testing::wielandt_is_pf;

namespace {

NonNegIntMatrix fibonacci() { return NonNegIntMatrix::from_rows({{0, 1}, {1, 1}}); }

NonNegIntMatrix directed_cycle(int n) {
    MatrixBuilder builder(n);
    for (int i = 0; i < n; ++i)
        builder.entry(i, (i + 1) % n) = 1;
    return builder.build();
}

} // namespace

TEST_CASE("graph_of: zero matrix has no edges") {
    const OrientedGraph g = graph_of(NonNegIntMatrix::zero(3));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("graph_of: edges are exactly the nonzero entries") {
    const OrientedGraph fib = graph_of(fibonacci());
    std::vector<OrientedGraph::Edge> expected_fib = {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    CHECK(fib.edges() == expected_fib);

    const OrientedGraph family = graph_of(family_operator(5));
    std::vector<OrientedGraph::Edge> expected_family = {
        {0, 1, 1}, {1, 1, 2}, {2, 0, 1}, {3, 1, 1}, {4, 2, 1}};
    CHECK(family.edges() == expected_family);
}

TEST_CASE("scc_decompose: complete graph is one component") {
    const NonNegIntMatrix complete = NonNegIntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const SccDecomposition scc = scc_decompose(complete);
    CHECK(scc.component_count() == 1);
    CHECK(scc.components.front() == std::vector<int>{0, 1, 2});
}

TEST_CASE("scc_decompose: family operator splits into singletons") {
    const SccDecomposition scc = scc_decompose(family_operator(5));
    REQUIRE(scc.component_count() == 5);
    for (int c = 0; c < 5; ++c)
        CHECK(scc.components[static_cast<std::size_t>(c)] == std::vector<int>{c});
    // Only vertex 2 (1-based) carries a cycle.
    const NonNegIntMatrix family = family_operator(5);
    for (int c = 0; c < 5; ++c) {
        const SccClass cls = classify_component_of(family, scc, c);
        if (c == 1)
            CHECK(cls == SccClass::expanding);
        else
            CHECK(cls == SccClass::trivial);
    }
    // Deterministic condensation order: sources first, min-vertex ties.
    CHECK(scc.condensation_order == std::vector<int>{3, 4, 2, 0, 1});
}

TEST_CASE("scc_decompose: directed cycle is one component") {
    const SccDecomposition scc = scc_decompose(directed_cycle(4));
    CHECK(scc.component_count() == 1);
    CHECK(scc.components.front().size() == 4);
}

TEST_CASE("condensation order renders the matrix block-triangular") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        const SccDecomposition scc = scc_decompose(a);

        std::vector<int> block_position(static_cast<std::size_t>(scc.component_count()));
        for (std::size_t pos = 0; pos < scc.condensation_order.size(); ++pos)
            block_position[static_cast<std::size_t>(scc.condensation_order[pos])] = static_cast<int>(pos);

        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (sgn(a.at(i, j)) == 0)
                    continue;
                const int bi = block_position[static_cast<std::size_t>(scc.component_of[static_cast<std::size_t>(i)])];
                const int bj = block_position[static_cast<std::size_t>(scc.component_of[static_cast<std::size_t>(j)])];
                CHECK(bi <= bj); // no entry below the block diagonal
            }
    }
}

TEST_CASE("restrict_to: identity restriction and principal submatrices") {
    const NonNegIntMatrix family = family_operator(5);
    CHECK(restrict_to(family, {0, 1, 2, 3, 4}) == family);
    CHECK(restrict_to(family, {1}) == NonNegIntMatrix::from_rows({{2}}));
    CHECK(restrict_to(fibonacci(), {1}) == NonNegIntMatrix::from_rows({{1}}));

    try {
        restrict_to(family, {});
        FAIL("expected EmptySet");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::empty_set);
    }
}

TEST_CASE("is_circle: cycles, weighted loops, trivial vertices") {
    CHECK(is_circle(directed_cycle(3), {0, 1, 2}));
    CHECK(is_circle(NonNegIntMatrix::identity(1), {0}));

    // Weight-2 self-loop breaks the circle condition.
    CHECK_FALSE(is_circle(family_operator(5), {1}));
    CHECK(classify_component(family_operator(5), {1}) == SccClass::expanding);

    // Single vertex without a self-loop: not a circle, distinguished trivial.
    CHECK_FALSE(is_circle(family_operator(5), {0}));
    CHECK(classify_component(family_operator(5), {0}) == SccClass::trivial);

    try {
        is_circle(family_operator(5), {0, 1});
        FAIL("expected NotAComponent");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::not_a_component);
    }
}

TEST_CASE("circle components power up to the identity") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        const SccDecomposition scc = scc_decompose(a);
        for (int c = 0; c < scc.component_count(); ++c) {
            if (classify_component_of(a, scc, c) != SccClass::circle)
                continue;
            const auto &component = scc.components[static_cast<std::size_t>(c)];
            const NonNegIntMatrix block = restrict_to(a, component);
            CHECK(mat_pow(block, component.size()) == NonNegIntMatrix::identity(block.dim()));
        }
    }
    // And a directed cycle outright.
    CHECK(mat_pow(directed_cycle(4), 4) == NonNegIntMatrix::identity(4));
}

TEST_CASE("exceeds_one: exact combinatorial verdicts") {
    CHECK_FALSE(exceeds_one(NonNegIntMatrix::identity(3)));
    CHECK_FALSE(exceeds_one(directed_cycle(5)));
    CHECK(exceeds_one(NonNegIntMatrix::from_rows({{2}})));
    CHECK(exceeds_one(fibonacci()));
    CHECK_FALSE(exceeds_one(NonNegIntMatrix::zero(2)));
}

TEST_CASE("exceeds_one agrees with the floating oracle away from 1") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        const double radius = float_spectral_radius(a);
        if (std::abs(radius - 1.0) <= 1e-9)
            continue; // only the exact test can decide this close to 1
        CHECK(exceeds_one(a) == (radius > 1.0));
    }
}

TEST_CASE("is_perron_frobenius: knowns") {
    CHECK(is_perron_frobenius(fibonacci()));
    CHECK_FALSE(is_perron_frobenius(directed_cycle(2))); // irreducible, period 2
    CHECK_FALSE(is_perron_frobenius(NonNegIntMatrix::zero(1)));
    CHECK(is_perron_frobenius(NonNegIntMatrix::from_rows({{3}})));
    for (int k = 2; k <= 10; ++k)
        CHECK_FALSE(is_perron_frobenius(family_operator(k))); // reducible for every truncation
}

TEST_CASE("is_perron_frobenius matches the Wielandt power probe") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        CHECK(is_perron_frobenius(a) == wielandt_is_pf(a));
    }
}

TEST_CASE("component_period: cycles and mixed loops") {
    CHECK(component_period(directed_cycle(2), {0, 1}) == 2);
    CHECK(component_period(directed_cycle(6), {0, 1, 2, 3, 4, 5}) == 6);
    CHECK(component_period(fibonacci(), {0, 1}) == 1);
    CHECK(component_period(family_operator(5), {1}) == 1);
    try {
        component_period(family_operator(5), {0}); // trivial: no cycle
        FAIL("expected NotAComponent");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::not_a_component);
    }
}
