#pragma once

#include "perron/digraph.hpp"
#include "perron/errors.hpp"
#include "perron/intmatrix.hpp"

#include <vector>

namespace perron {

/// Certified enclosure lower <= spectral radius <= upper, both exact
/// rationals. `witness` is the vector that produced the bounds: the final
/// Collatz-Wielandt iterate for primitive components, the starting all-ones
/// vector where the bounds came through the period-power route, an indicator
/// vector for components with exactly known radius.
struct SpectralInterval {
    Rat lower;
    Rat upper;
    ConeVector witness;
};

inline constexpr int default_iteration_cap = 10000;

/// Thrown when Collatz-Wielandt refinement hits the iteration cap before the
/// requested gap closes; carries the bounds reached so far.
class gap_not_reached_error : public error {
  public:
    gap_not_reached_error(int cap, Rat lower, Rat upper);

    int iteration_cap;
    Rat partial_lower;
    Rat partial_upper;
};

/// One Collatz-Wielandt step: lower = min_i (Ax)_i / x_i and
/// upper = max_i (Ax)_i / x_i, exact. Requires A irreducible and x strictly
/// positive; throws NotIrreducible / NonPositiveWitness.
SpectralInterval collatz_wielandt(const NonNegIntMatrix &matrix, const ConeVector &x);

/// Enclosure of the spectral radius with upper - lower <= gap, taken as the
/// maximum over per-SCC enclosures. Trivial components contribute exactly 0,
/// circles exactly 1, primitive expanding components are refined by iterating
/// the witness, and imprimitive ones go through the radius of A^period
/// followed by an exact rational p-th root bisection.
SpectralInterval spectral_radius(const NonNegIntMatrix &matrix, const Rat &gap,
                                 int iteration_cap = default_iteration_cap);

/// Per-component enclosure with the same contract; `component` must be an SCC
/// of G(A) (throws NotAComponent). Bounds refer to the restricted matrix.
SpectralInterval component_spectral_radius(const NonNegIntMatrix &matrix, const std::vector<int> &component,
                                           const Rat &gap, int iteration_cap = default_iteration_cap);

/// The SCC whose radius attains the spectral radius of the whole matrix,
/// certified by interval separation from every other component. When two
/// components' radii cannot be separated, the smallest vertex index wins and
/// every contender lands in `unresolved_ties` (empty on clean separation).
struct DominantComponent {
    std::vector<int> vertices;
    SpectralInterval interval;
    std::vector<std::vector<int>> unresolved_ties;
};

/// Throws Acyclic when no SCC contains a cycle (nilpotent matrix, radius 0).
DominantComponent dominant_component(const NonNegIntMatrix &matrix, int iteration_cap = default_iteration_cap);

} // namespace perron
