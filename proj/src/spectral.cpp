// Certified spectral radius enclosures.
//
// Everything here is exact rational arithmetic. The enclosure of a matrix is
// the maximum of per-SCC enclosures (the eigenvalues of a block-triangular
// matrix are the union over the diagonal blocks). Per component:
//
//   trivial (no cycle)        -> exactly [0, 0]
//   circle (unit-weight cycle)-> exactly [1, 1]
//   expanding, aperiodic      -> iterate x <- Bx from the all-ones vector;
//                                min/max of (Bx)_i / x_i sandwich the radius,
//                                the min is nondecreasing and the max is
//                                nonincreasing, and the gap closes at the
//                                usual power-iteration rate
//   expanding, period p >= 2  -> Collatz-Wielandt need not converge, but B^p
//                                splits into primitive cyclic classes with
//                                radius(B)^p each; enclose those and take an
//                                exact rational p-th root by bisection
//
// The iterate is kept as an integer vector divided by the gcd of its
// coordinates, so bit growth stays linear in the iteration count.

#include "perron/spectral.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace perron {

gap_not_reached_error::gap_not_reached_error(int cap, Rat lower, Rat upper)
    : error(error_kind::gap_not_reached,
            "gap not reached after " + std::to_string(cap) + " iterations; bounds so far [" +
                lower.get_str() + ", " + upper.get_str() + "]"),
      iteration_cap(cap), partial_lower(std::move(lower)), partial_upper(std::move(upper)) {}

namespace {

bool is_irreducible(const NonNegIntMatrix &matrix) {
    const SccDecomposition scc = scc_decompose(matrix);
    if (scc.component_count() != 1)
        return false;
    return !(matrix.dim() == 1 && sgn(matrix.at(0, 0)) == 0);
}

struct QuotientBounds {
    Rat lower;
    Rat upper;
};

// min/max of y_i / x_i over strictly positive x.
QuotientBounds quotient_bounds(const std::vector<Int> &y, const std::vector<Int> &x) {
    QuotientBounds bounds{make_rat(y[0], x[0]), make_rat(y[0], x[0])};
    for (std::size_t i = 1; i < y.size(); ++i) {
        Rat q = make_rat(y[i], x[i]);
        if (q < bounds.lower)
            bounds.lower = q;
        if (q > bounds.upper)
            bounds.upper = std::move(q);
    }
    return bounds;
}

std::vector<Int> multiply(const NonNegIntMatrix &matrix, const std::vector<Int> &x) {
    const int n = matrix.dim();
    std::vector<Int> y(static_cast<std::size_t>(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Int &aij = matrix.at(i, j);
            if (sgn(aij) != 0)
                mpz_addmul(y[static_cast<std::size_t>(i)].get_mpz_t(), aij.get_mpz_t(),
                           x[static_cast<std::size_t>(j)].get_mpz_t());
        }
    return y;
}

void divide_by_content(std::vector<Int> &x) {
    Int content = 0;
    for (const Int &c : x)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Int &c : x)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

ConeVector to_cone(const std::vector<Int> &x) {
    std::vector<Rat> coords;
    coords.reserve(x.size());
    for (const Int &c : x)
        coords.emplace_back(c);
    return ConeVector{std::move(coords)};
}

// Collatz-Wielandt refinement for a primitive (irreducible, aperiodic)
// matrix. The all-ones start makes the first bounds the min/max row sums.
SpectralInterval refine_primitive(const NonNegIntMatrix &matrix, const Rat &gap, int iteration_cap) {
    std::vector<Int> x(static_cast<std::size_t>(matrix.dim()), Int(1));
    QuotientBounds bounds{Rat(0), Rat(0)};
    for (int iteration = 0; iteration < iteration_cap; ++iteration) {
        std::vector<Int> y = multiply(matrix, x);
        bounds = quotient_bounds(y, x);
        if (bounds.upper - bounds.lower <= gap)
            return SpectralInterval{bounds.lower, bounds.upper, to_cone(x)};
        x = std::move(y);
        divide_by_content(x);
    }
    throw gap_not_reached_error(iteration_cap, bounds.lower, bounds.upper);
}

// Largest-style rational r with r^p <= q, within eps of the true root.
// Requires q >= 1.
Rat root_lower(const Rat &q, int p, const Rat &eps) {
    Rat lo = 1;
    Rat hi = q + 1;
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        Rat power = mid;
        for (int i = 1; i < p; ++i)
            power *= mid;
        if (power <= q)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return lo;
}

// Rational r with r^p >= q, within eps of the true root. Requires q >= 1.
Rat root_upper(const Rat &q, int p, const Rat &eps) {
    Rat lo = 1;
    Rat hi = q + 1;
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        Rat power = mid;
        for (int i = 1; i < p; ++i)
            power *= mid;
        if (power >= q)
            hi = std::move(mid);
        else
            lo = std::move(mid);
    }
    return hi;
}

SpectralInterval radius_impl(const NonNegIntMatrix &matrix, const Rat &gap, int iteration_cap, int depth);

// Enclosure for one strongly connected component, already classified.
// Bounds refer to the restriction of `matrix` to `component`.
SpectralInterval enclose_component(const NonNegIntMatrix &matrix, const std::vector<int> &component,
                                   SccClass cls, const Rat &gap, int iteration_cap, int depth) {
    const int size = static_cast<int>(component.size());
    if (cls == SccClass::trivial)
        return SpectralInterval{Rat(0), Rat(0), ConeVector{std::vector<Rat>(1, Rat(1))}};
    if (cls == SccClass::circle)
        return SpectralInterval{Rat(1), Rat(1),
                                ConeVector{std::vector<Rat>(static_cast<std::size_t>(size), Rat(1))}};

    const NonNegIntMatrix block = restrict_to(matrix, component);
    std::vector<int> all(component.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    const int period = component_period(block, all);

    if (period == 1)
        return refine_primitive(block, gap, iteration_cap);

    if (depth > 3)
        fail(error_kind::internal_error, "period reduction did not terminate");

    // radius(block)^period = radius(block^period); the power splits into
    // primitive cyclic classes. The inner enclosure at gap/2, clamped below
    // by 1 (the block is expanding, so its radius exceeds 1), keeps the
    // root interval within gap after adding gap/4 bisection slack per side.
    const NonNegIntMatrix power = mat_pow(block, static_cast<unsigned long>(period));
    const Rat inner_gap = gap / 2;
    const SpectralInterval inner = radius_impl(power, inner_gap, iteration_cap, depth + 1);
    Rat lo = inner.lower < 1 ? Rat(1) : inner.lower;
    Rat hi = inner.upper < lo ? lo : inner.upper;
    const Rat slack = gap / 4;
    Rat a = root_lower(lo, period, slack);
    Rat b = root_upper(hi, period, slack);
    if (b - a > gap)
        fail(error_kind::internal_error, "root enclosure wider than requested gap");
    return SpectralInterval{std::move(a), std::move(b),
                            ConeVector{std::vector<Rat>(static_cast<std::size_t>(size), Rat(1))}};
}

ConeVector embed_witness(const ConeVector &local, const std::vector<int> &component, int n) {
    std::vector<Rat> coords(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t i = 0; i < component.size(); ++i)
        coords[static_cast<std::size_t>(component[i])] = local.coords[i];
    return ConeVector{std::move(coords)};
}

SpectralInterval radius_impl(const NonNegIntMatrix &matrix, const Rat &gap, int iteration_cap, int depth) {
    const SccDecomposition scc = scc_decompose(matrix);
    SpectralInterval best;
    for (int c = 0; c < scc.component_count(); ++c) {
        const std::vector<int> &component = scc.components[static_cast<std::size_t>(c)];
        const SccClass cls = classify_component_of(matrix, scc, c);
        SpectralInterval interval = enclose_component(matrix, component, cls, gap, iteration_cap, depth);
        if (c == 0 || interval.lower > best.lower) {
            best.lower = interval.lower;
            best.witness = embed_witness(interval.witness, component, matrix.dim());
        }
        if (c == 0 || interval.upper > best.upper)
            best.upper = interval.upper;
    }
    return best;
}

} // namespace

SpectralInterval collatz_wielandt(const NonNegIntMatrix &matrix, const ConeVector &x) {
    if (x.dim() != matrix.dim())
        fail(error_kind::dimension_mismatch, "witness dimension " + std::to_string(x.dim()) +
                                                 " against matrix dimension " + std::to_string(matrix.dim()));
    for (int i = 0; i < x.dim(); ++i)
        if (sgn(x.coords[static_cast<std::size_t>(i)]) <= 0)
            fail(error_kind::non_positive_witness,
                 "witness coordinate " + std::to_string(i + 1) + " is not strictly positive");
    if (!is_irreducible(matrix))
        fail(error_kind::not_irreducible, "matrix is not irreducible");

    const ConeVector image = apply(matrix, x);
    Rat lower, upper;
    for (int i = 0; i < x.dim(); ++i) {
        Rat q = image.coords[static_cast<std::size_t>(i)] / x.coords[static_cast<std::size_t>(i)];
        if (i == 0) {
            lower = q;
            upper = std::move(q);
            continue;
        }
        if (q < lower)
            lower = q;
        if (q > upper)
            upper = std::move(q);
    }
    return SpectralInterval{std::move(lower), std::move(upper), x};
}

SpectralInterval spectral_radius(const NonNegIntMatrix &matrix, const Rat &gap, int iteration_cap) {
    if (sgn(gap) <= 0)
        fail(error_kind::non_positive_parameter, "gap must be > 0");
    if (iteration_cap < 1)
        fail(error_kind::non_positive_parameter, "iteration cap must be >= 1");
    return radius_impl(matrix, gap, iteration_cap, 0);
}

SpectralInterval component_spectral_radius(const NonNegIntMatrix &matrix, const std::vector<int> &component,
                                           const Rat &gap, int iteration_cap) {
    if (sgn(gap) <= 0)
        fail(error_kind::non_positive_parameter, "gap must be > 0");
    if (iteration_cap < 1)
        fail(error_kind::non_positive_parameter, "iteration cap must be >= 1");
    const SccClass cls = classify_component(matrix, component); // validates membership
    std::vector<int> sorted = component;
    std::sort(sorted.begin(), sorted.end());
    return enclose_component(matrix, sorted, cls, gap, iteration_cap, 0);
}

DominantComponent dominant_component(const NonNegIntMatrix &matrix, int iteration_cap) {
    if (iteration_cap < 1)
        fail(error_kind::non_positive_parameter, "iteration cap must be >= 1");
    const SccDecomposition scc = scc_decompose(matrix);

    std::vector<int> cyclic; // component indices carrying at least one cycle
    std::vector<SccClass> classes(static_cast<std::size_t>(scc.component_count()));
    for (int c = 0; c < scc.component_count(); ++c) {
        classes[static_cast<std::size_t>(c)] = classify_component_of(matrix, scc, c);
        if (classes[static_cast<std::size_t>(c)] != SccClass::trivial)
            cyclic.push_back(c);
    }
    if (cyclic.empty())
        fail(error_kind::acyclic, "no strongly connected component contains a cycle");

    // Refine all candidate enclosures together until the best one separates
    // strictly above every other. Radii that genuinely coincide can never
    // separate; once the gap passes the tie threshold the smallest vertex
    // index wins and every overlapping contender is reported.
    const Rat tie_threshold = make_rat(Int(1), Int(1) << 96);
    Rat gap = make_rat(Int(1), Int(8));
    while (true) {
        std::vector<SpectralInterval> intervals;
        intervals.reserve(cyclic.size());
        for (int c : cyclic)
            intervals.push_back(enclose_component(matrix, scc.components[static_cast<std::size_t>(c)],
                                                  classes[static_cast<std::size_t>(c)], gap, iteration_cap, 0));

        std::size_t best = 0;
        for (std::size_t i = 1; i < intervals.size(); ++i)
            if (intervals[i].lower > intervals[best].lower)
                best = i; // listing order = smallest-vertex order, so ties keep the earlier one

        std::vector<std::size_t> blockers;
        for (std::size_t i = 0; i < intervals.size(); ++i)
            if (i != best && !(intervals[best].lower > intervals[i].upper))
                blockers.push_back(i);

        const std::vector<int> &vertices = scc.components[static_cast<std::size_t>(cyclic[best])];
        if (blockers.empty())
            return DominantComponent{vertices, std::move(intervals[best]), {}};

        const bool best_exact = intervals[best].lower == intervals[best].upper;
        bool all_exact_ties = best_exact;
        for (std::size_t i : blockers)
            all_exact_ties = all_exact_ties && intervals[i].lower == intervals[i].upper &&
                             intervals[i].lower == intervals[best].lower;

        if (all_exact_ties || gap < tie_threshold) {
            std::vector<std::vector<int>> ties;
            ties.push_back(vertices);
            for (std::size_t i : blockers)
                ties.push_back(scc.components[static_cast<std::size_t>(cyclic[i])]);
            return DominantComponent{vertices, std::move(intervals[best]), std::move(ties)};
        }
        gap /= 8;
    }
}

} // namespace perron
