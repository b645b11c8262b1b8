#include "perron/spectral.hpp"

#include "perron/errors.hpp"
#include "perron/family.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace perron;
using perron::testing::float_spectral_radius;
using perron::testing::random_matrix;
using perron::testing::random_permutation_conjugate;

namespace {

NonNegIntMatrix fibonacci() { return NonNegIntMatrix::from_rows({{0, 1}, {1, 1}}); }

ConeVector ones(int n) { return ConeVector{std::vector<Rat>(static_cast<std::size_t>(n), Rat(1))}; }

// x < golden ratio iff x^2 < x + 1 (for x >= 0), so an interval encloses
// the golden ratio iff these two exact inequalities hold.
void check_encloses_golden_ratio(const Rat &lower, const Rat &upper) {
    CHECK(lower * lower <= lower + 1);
    CHECK(upper * upper >= upper + 1);
}

} // namespace

TEST_CASE("collatz_wielandt: frozen quotient bounds") {
    const SpectralInterval one_by_one =
        collatz_wielandt(NonNegIntMatrix::from_rows({{2}}), cone_vector({Rat(1)}));
    CHECK(one_by_one.lower == 2);
    CHECK(one_by_one.upper == 2);

    const SpectralInterval from_ones = collatz_wielandt(fibonacci(), ones(2));
    CHECK(from_ones.lower == 1);
    CHECK(from_ones.upper == 2);

    const SpectralInterval tighter = collatz_wielandt(fibonacci(), cone_vector({Rat(2), Rat(3)}));
    CHECK(tighter.lower == make_rat(3, 2));
    CHECK(tighter.upper == make_rat(5, 3));
    check_encloses_golden_ratio(tighter.lower, tighter.upper);
}

TEST_CASE("collatz_wielandt rejects bad inputs") {
    try {
        collatz_wielandt(family_operator(5), ones(5)); // reducible
        FAIL("expected NotIrreducible");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::not_irreducible);
    }
    try {
        collatz_wielandt(fibonacci(), ConeVector{{Rat(1), Rat(0)}});
        FAIL("expected NonPositiveWitness");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::non_positive_witness);
    }
}

TEST_CASE("collatz_wielandt with the ones witness reads off row sums") {
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 20) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const NonNegIntMatrix a = random_matrix(rng, n, 3);
        const SccDecomposition scc = scc_decompose(a);
        if (scc.component_count() != 1 || (n == 1 && sgn(a.at(0, 0)) == 0))
            continue;
        ++tested;
        const SpectralInterval interval = collatz_wielandt(a, ones(n));
        Int min_row = a.row_sum(0), max_row = a.row_sum(0);
        for (int i = 1; i < n; ++i) {
            min_row = std::min(min_row, a.row_sum(i));
            max_row = std::max(max_row, a.row_sum(i));
        }
        CHECK(interval.lower == Rat(min_row));
        CHECK(interval.upper == Rat(max_row));
    }
}

TEST_CASE("spectral_radius: exact values for structured matrices") {
    const SpectralInterval identity3 = spectral_radius(NonNegIntMatrix::identity(3), make_rat(1, 1000));
    CHECK(identity3.lower == 1);
    CHECK(identity3.upper == 1);

    const SpectralInterval family = spectral_radius(family_operator(8), make_rat(1, 2));
    CHECK(family.lower == 2);
    CHECK(family.upper == 2);

    const SpectralInterval nilpotent =
        spectral_radius(NonNegIntMatrix::from_rows({{0, 1}, {0, 0}}), make_rat(1, 1000));
    CHECK(nilpotent.lower == 0);
    CHECK(nilpotent.upper == 0);
}

TEST_CASE("spectral_radius encloses the golden ratio at width 1e-6") {
    const Rat gap = make_rat(1, 1000000);
    const SpectralInterval interval = spectral_radius(fibonacci(), gap);
    CHECK(interval.upper - interval.lower <= gap);
    check_encloses_golden_ratio(interval.lower, interval.upper);
}

TEST_CASE("spectral_radius handles imprimitive components through the period power") {
    // Period-2 component with radius exactly 2.
    const NonNegIntMatrix swap2 = NonNegIntMatrix::from_rows({{0, 2}, {2, 0}});
    const Rat gap = make_rat(1, 1000000);
    const SpectralInterval interval = spectral_radius(swap2, gap);
    CHECK(interval.upper - interval.lower <= gap);
    CHECK(interval.lower <= 2);
    CHECK(interval.upper >= 2);

    // Period-2 component with irrational radius sqrt(2).
    const SpectralInterval root2 = spectral_radius(NonNegIntMatrix::from_rows({{0, 1}, {2, 0}}), gap);
    CHECK(root2.upper - root2.lower <= gap);
    CHECK(root2.lower * root2.lower <= 2);
    CHECK(root2.upper * root2.upper >= 2);

    // Period-3 cycle with one doubled edge: radius is the cube root of 2.
    const NonNegIntMatrix cycle3 = NonNegIntMatrix::from_rows({{0, 2, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(component_period(cycle3, {0, 1, 2}) == 3);
    const SpectralInterval root3 = spectral_radius(cycle3, gap);
    CHECK(root3.upper - root3.lower <= gap);
    CHECK(root3.lower * root3.lower * root3.lower <= 2);
    CHECK(root3.upper * root3.upper * root3.upper >= 2);
}

TEST_CASE("monotone refinement: iterating the witness tightens both bounds") {
    std::mt19937_64 rng(32);
    int tested = 0;
    while (tested < 15) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        if (!is_perron_frobenius(a))
            continue;
        ++tested;
        ConeVector x = ones(n);
        Rat lower(0), upper(-1);
        for (int step = 0; step < 12; ++step) {
            const SpectralInterval interval = collatz_wielandt(a, x);
            CHECK(interval.lower >= lower);
            if (step > 0)
                CHECK(interval.upper <= upper);
            lower = interval.lower;
            upper = interval.upper;
            x = apply(a, x);
        }
    }
}

TEST_CASE("global enclosure is the maximum over per-component enclosures") {
    std::mt19937_64 rng(33);
    const Rat gap = make_rat(1, 100000);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const NonNegIntMatrix a = random_matrix(rng, n, 2);
        const SpectralInterval whole = spectral_radius(a, gap);
        const SccDecomposition scc = scc_decompose(a);
        Rat max_lower(0), max_upper(0);
        for (const auto &component : scc.components) {
            const SpectralInterval part = component_spectral_radius(a, component, gap);
            max_lower = std::max(max_lower, part.lower);
            max_upper = std::max(max_upper, part.upper);
        }
        CHECK(whole.lower == max_lower);
        CHECK(whole.upper == max_upper);
    }
}

TEST_CASE("enclosures are invariant under permutation conjugation") {
    std::mt19937_64 rng(34);
    const Rat gap = make_rat(1, 1000000);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const NonNegIntMatrix a = random_matrix(rng, n, 3);
        const NonNegIntMatrix b = random_permutation_conjugate(rng, a);
        const SpectralInterval ia = spectral_radius(a, gap);
        const SpectralInterval ib = spectral_radius(b, gap);
        CHECK(ia.lower == ib.lower);
        CHECK(ia.upper == ib.upper);
    }
}

TEST_CASE("soundness against the dense floating oracle") {
    std::mt19937_64 rng(35);
    const Rat gap = make_rat(1, 1000000);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const NonNegIntMatrix a = random_matrix(rng, n, 3);
        const SpectralInterval interval = spectral_radius(a, gap);
        const double radius = float_spectral_radius(a);
        CHECK(interval.lower.get_d() <= radius + 1e-6);
        CHECK(interval.upper.get_d() >= radius - 1e-6);
    }
}

TEST_CASE("gap_not_reached carries the cap and the partial bounds") {
    try {
        spectral_radius(fibonacci(), make_rat(Int(1), Int(1) << 128), 3);
        FAIL("expected GapNotReached");
    } catch (const gap_not_reached_error &e) {
        CHECK(e.kind() == error_kind::gap_not_reached);
        CHECK(e.iteration_cap == 3);
        CHECK(e.partial_lower <= e.partial_upper);
        check_encloses_golden_ratio(e.partial_lower, e.partial_upper);
    }
}

TEST_CASE("dominant_component: separation, diagnostics, errors") {
    const DominantComponent family = dominant_component(family_operator(6));
    CHECK(family.vertices == std::vector<int>{1});
    CHECK(family.interval.lower == 2);
    CHECK(family.interval.upper == 2);
    CHECK(family.unresolved_ties.empty());

    // Fibonacci block against a faster [3] block: the singleton wins.
    const NonNegIntMatrix blocks = NonNegIntMatrix::from_rows({{0, 1, 0}, {1, 1, 0}, {0, 0, 3}});
    const DominantComponent fast = dominant_component(blocks);
    CHECK(fast.vertices == std::vector<int>{2});
    CHECK(fast.unresolved_ties.empty());
    CHECK(fast.interval.lower == 3);

    try {
        dominant_component(NonNegIntMatrix::from_rows({{0, 1}, {0, 0}}));
        FAIL("expected Acyclic");
    } catch (const error &e) {
        CHECK(e.kind() == error_kind::acyclic);
    }
}

TEST_CASE("dominant_component reports unresolvable ties by smallest vertex") {
    const NonNegIntMatrix twin = NonNegIntMatrix::from_rows({{2, 0}, {0, 2}});
    const DominantComponent dominant = dominant_component(twin);
    CHECK(dominant.vertices == std::vector<int>{0});
    REQUIRE(dominant.unresolved_ties.size() == 2);
    CHECK(dominant.unresolved_ties[0] == std::vector<int>{0});
    CHECK(dominant.unresolved_ties[1] == std::vector<int>{1});
    CHECK(dominant.interval.lower == 2);
    CHECK(dominant.interval.upper == 2);
}
