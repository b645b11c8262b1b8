#include "perron/numeric.hpp"

#include "perron/errors.hpp"

#include <cmath>
#include <cstddef>

namespace perron {

Rat make_rat(Int num, Int den) {
    if (sgn(den) == 0)
        fail(error_kind::internal_error, "rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string &text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (sgn(den) == 0)
            fail(error_kind::parse_error, "zero denominator in rational '" + text + "'");
        return make_rat(std::move(num), std::move(den));
    } catch (const std::invalid_argument &) {
        fail(error_kind::parse_error, "malformed rational '" + text + "'");
    }
}

std::string rat_to_string(const Rat &value) { return value.get_str(); }

std::string decimal_string(const Rat &value, int significant) {
    if (significant < 1)
        significant = 1;
    if (sgn(value) == 0)
        return "0";
    if (sgn(value) < 0)
        return "-" + decimal_string(-value, significant);

    const Int num = value.get_num();
    const Int den = value.get_den();

    // Number of digits after the decimal point so that exactly `significant`
    // significant digits survive.
    long frac_digits = 0;
    Int integer_part = num / den;
    if (sgn(integer_part) > 0) {
        const long int_digits = static_cast<long>(integer_part.get_str().size());
        frac_digits = significant - int_digits;
        if (frac_digits < 0)
            frac_digits = 0;
    } else {
        long leading_zeros = 0;
        Int probe = num;
        while (probe < den) {
            probe *= 10;
            ++leading_zeros;
        }
        frac_digits = leading_zeros - 1 + significant;
    }

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    // round half up: floor((2 * num * scale + den) / (2 * den))
    Int scaled = (2 * num * scale + den) / (2 * den);

    std::string digits = scaled.get_str();
    if (frac_digits == 0)
        return digits;
    if (static_cast<long>(digits.size()) <= frac_digits)
        digits.insert(0, static_cast<std::size_t>(frac_digits) - digits.size() + 1, '0');
    digits.insert(digits.size() - static_cast<std::size_t>(frac_digits), ".");
    return digits;
}

namespace {

double log_of_int(const Int &value) {
    signed long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

} // namespace

double approx_log(const Rat &value) {
    return log_of_int(value.get_num()) - log_of_int(value.get_den());
}

} // namespace perron
