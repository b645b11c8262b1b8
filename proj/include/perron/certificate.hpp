#pragma once

#include "perron/intmatrix.hpp"
#include "perron/spectral.hpp"

#include <vector>

namespace perron {

/// Exact witness that the spectral radius of an n x n matrix is at least
/// 2^(1/n'): a dominant strongly connected component that is not a circle,
/// together with the column sums of B^{n'} for B the restriction to that
/// component. Every column sum >= 2 forces radius(B)^{n'} >= 2, and the
/// block-triangular structure lifts the bound to the full matrix.
///
/// `dominant_vertices` are 0-based and sorted; serialization is 1-based.
struct PennerCertificate {
    int n = 0;
    std::vector<int> dominant_vertices;
    int n_prime = 0;
    std::vector<Int> power_column_sums;

    /// The sharper exponent 1/n' (radius >= 2^{1/n'}).
    Rat exponent_n_prime() const;
    /// The dimension-level exponent 1/n (radius >= 2^{1/n}).
    Rat exponent_n() const;

    bool operator==(const PennerCertificate &other) const = default;
};

/// Generates the certificate. Requires spectral radius > 1, checked exactly;
/// throws LeadingEigenvalueNotAboveOne otherwise. The 1 x 1 matrix [[k]],
/// k >= 2 is certified with n' = 1 (k >= 2 = 2^{1/1}).
PennerCertificate certify(const NonNegIntMatrix &matrix);

/// Independent verifier: recomputes everything from the matrix and the
/// claimed vertex set. True iff the vertex set is an SCC of G(A), is not a
/// circle, and the recomputed column sums of restrict(A, set)^{n'} are all
/// >= 2 and equal the certificate's. Throws DimensionMismatch when cert.n
/// differs from the matrix dimension.
bool check(const NonNegIntMatrix &matrix, const PennerCertificate &certificate);

/// log(radius) >= log 2 / (3 |chi|) for a Markov decomposition over a core
/// of characteristic chi: at most 3 |chi| arcs, then the column-sum bound.
struct BoundReport {
    long chi_abs = 0;
    long arc_cap = 0; // 3 * chi_abs
    Rat exponent;     // 1 / (3 * chi_abs), meaning radius >= 2^exponent

    bool operator==(const BoundReport &other) const = default;
};

/// Throws NonPositiveChi when chi_abs < 1.
BoundReport core_bound(long chi_abs);

/// The two exponent readings of a certificate: 1/n' (sharper) and 1/n.
struct BoundExponents {
    Rat sharper; // 1/n'
    Rat stated;  // 1/n
};

BoundExponents bound_from_certificate(const PennerCertificate &certificate);

} // namespace perron
