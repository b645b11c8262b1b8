#include "perron/certificate.hpp"

#include "perron/digraph.hpp"
#include "perron/errors.hpp"

#include <algorithm>
#include <string>

namespace perron {

namespace {

std::vector<Int> power_column_sums(const NonNegIntMatrix &matrix, const std::vector<int> &vertices) {
    const NonNegIntMatrix block = restrict_to(matrix, vertices);
    const NonNegIntMatrix power = mat_pow(block, static_cast<unsigned long>(block.dim()));
    std::vector<Int> sums;
    sums.reserve(static_cast<std::size_t>(power.dim()));
    for (int j = 0; j < power.dim(); ++j)
        sums.push_back(power.column_sum(j));
    return sums;
}

} // namespace

Rat PennerCertificate::exponent_n_prime() const { return make_rat(Int(1), Int(n_prime)); }

Rat PennerCertificate::exponent_n() const { return make_rat(Int(1), Int(n)); }

PennerCertificate certify(const NonNegIntMatrix &matrix) {
    if (!exceeds_one(matrix))
        fail(error_kind::leading_eigenvalue_not_above_one,
             "leading eigenvalue is not above 1; the column-sum bound does not apply");

    // The dominant SCC carries the full matrix's leading eigenvalue. Since
    // that eigenvalue exceeds 1, the component is expanding, hence not a
    // circle, and every vertex of it sees at least two paths of length n'.
    const DominantComponent dominant = dominant_component(matrix);

    PennerCertificate certificate;
    certificate.n = matrix.dim();
    certificate.dominant_vertices = dominant.vertices;
    certificate.n_prime = static_cast<int>(dominant.vertices.size());
    certificate.power_column_sums = power_column_sums(matrix, dominant.vertices);
    for (const Int &sum : certificate.power_column_sums)
        if (sum < 2)
            fail(error_kind::internal_error, "column sum below 2 on an expanding component");
    return certificate;
}

bool check(const NonNegIntMatrix &matrix, const PennerCertificate &certificate) {
    if (certificate.n != matrix.dim())
        fail(error_kind::dimension_mismatch, "certificate is for dimension " + std::to_string(certificate.n) +
                                                 ", matrix has dimension " + std::to_string(matrix.dim()));

    const std::vector<int> &vertices = certificate.dominant_vertices;
    if (vertices.empty() || certificate.n_prime != static_cast<int>(vertices.size()))
        return false;
    if (!std::is_sorted(vertices.begin(), vertices.end()))
        return false;
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        return false;
    for (int v : vertices)
        if (v < 0 || v >= matrix.dim())
            return false;

    // Claimed set must be exactly one SCC, and an expanding one.
    const SccDecomposition scc = scc_decompose(matrix);
    const int c = scc.component_of[static_cast<std::size_t>(vertices.front())];
    if (scc.components[static_cast<std::size_t>(c)] != vertices)
        return false;
    if (classify_component_of(matrix, scc, c) != SccClass::expanding)
        return false;

    const std::vector<Int> recomputed = power_column_sums(matrix, vertices);
    if (recomputed != certificate.power_column_sums)
        return false;
    for (const Int &sum : recomputed)
        if (sum < 2)
            return false;
    return true;
}

BoundReport core_bound(long chi_abs) {
    if (chi_abs < 1)
        fail(error_kind::non_positive_chi, "core characteristic magnitude must be >= 1, got " +
                                               std::to_string(chi_abs));
    BoundReport report;
    report.chi_abs = chi_abs;
    report.arc_cap = 3 * chi_abs;
    report.exponent = make_rat(Int(1), Int(report.arc_cap));
    return report;
}

BoundExponents bound_from_certificate(const PennerCertificate &certificate) {
    return BoundExponents{certificate.exponent_n_prime(), certificate.exponent_n()};
}

} // namespace perron
