#pragma once

#include "perron/intmatrix.hpp"

#include <string>

namespace perron {

/// Truncation to dimension k of the incidence operator of the basic member
/// of the twist-and-shift example family: entry (1,2) = 1, entry (2,2) = 2,
/// entry (i, i-2) = 1 for 3 <= i <= k (1-based), all else 0. Every
/// truncation keeps the dominant 1 x 1 block [2], so the leading eigenvalue
/// is 2 independently of k. Throws DimensionTooSmall for k < 2.
NonNegIntMatrix family_operator(int k);

/// Stretch law for the degree-d member: its leading eigenvalue is 2^(1/d).
/// Kept symbolically as the exponent; decimals are rendered on demand.
struct FamilyStretch {
    long d = 0;
    Rat exponent; // 1/d, meaning radius = 2^exponent
};

FamilyStretch family_stretch(long d); // throws NonPositiveParameter for d < 1

/// Decimal approximation of 2^(1/d) to `significant` digits (truncated
/// integer d-th root of 2 * 10^(d * digits); exact up to the last digit).
std::string family_stretch_decimal(long d, int significant = 10);

/// Actual growth exponent log2(radius) = 1/d of the degree-d member against
/// the arc-budget bound exponent 1/(3 chi_abs); the ratio is 3 chi_abs / d,
/// constant in d whenever chi_abs grows linearly with d.
struct SharpnessReport {
    long d = 0;
    long chi_abs = 0;
    Rat actual_exponent; // 1/d
    Rat bound_exponent;  // 1/(3 chi_abs)
    Rat ratio;           // actual / bound = 3 chi_abs / d
};

SharpnessReport sharpness_report(long d, long chi_abs);

/// The exact eigenvector of family_operator(k) for eigenvalue 2:
/// x_1 = 1, x_2 = 2, x_i = x_{i-2} / 2. Verifies A x = 2 x in exact
/// rational arithmetic before returning.
ConeVector family_eigenvector(int k);

} // namespace perron
