#include "perron/family.hpp"

#include "perron/certificate.hpp"
#include "perron/errors.hpp"

#include <string>

namespace perron {

NonNegIntMatrix family_operator(int k) {
    if (k < 2)
        fail(error_kind::dimension_too_small,
             "family operator needs dimension >= 2, got " + std::to_string(k));
    MatrixBuilder builder(k);
    builder.entry(0, 1) = 1;
    builder.entry(1, 1) = 2;
    for (int i = 2; i < k; ++i)
        builder.entry(i, i - 2) = 1;
    return builder.build();
}

FamilyStretch family_stretch(long d) {
    if (d < 1)
        fail(error_kind::non_positive_parameter, "covering degree must be >= 1, got " + std::to_string(d));
    return FamilyStretch{d, make_rat(Int(1), Int(d))};
}

std::string family_stretch_decimal(long d, int significant) {
    family_stretch(d); // validates d
    if (significant < 1)
        significant = 1;
    // 2^(1/d) in [1, 2): one integer digit, so `significant` digits means
    // significant-1 decimals. floor((2 * 10^(d*f))^(1/d)) gives them exactly.
    const long frac = significant - 1;
    Int scaled = 2;
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(frac) * static_cast<unsigned long>(d));
    scaled *= power;
    Int root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(d));
    std::string digits = root.get_str();
    if (frac == 0)
        return digits;
    digits.insert(digits.size() - static_cast<std::size_t>(frac), ".");
    return digits;
}

SharpnessReport sharpness_report(long d, long chi_abs) {
    if (d < 1)
        fail(error_kind::non_positive_parameter, "covering degree must be >= 1, got " + std::to_string(d));
    const BoundReport bound = core_bound(chi_abs); // validates chi_abs
    SharpnessReport report;
    report.d = d;
    report.chi_abs = chi_abs;
    report.actual_exponent = make_rat(Int(1), Int(d));
    report.bound_exponent = bound.exponent;
    report.ratio = report.actual_exponent / report.bound_exponent;
    return report;
}

ConeVector family_eigenvector(int k) {
    const NonNegIntMatrix matrix = family_operator(k);
    std::vector<Rat> coords(static_cast<std::size_t>(k));
    coords[0] = 1;
    coords[1] = 2;
    for (int i = 2; i < k; ++i)
        coords[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i - 2)] / 2;
    ConeVector x = cone_vector(std::move(coords));

    const ConeVector image = apply(matrix, x);
    for (int i = 0; i < k; ++i)
        if (image.coords[static_cast<std::size_t>(i)] != 2 * x.coords[static_cast<std::size_t>(i)])
            fail(error_kind::internal_error, "family eigenvector identity A x = 2 x failed");
    return x;
}

} // namespace perron
