#pragma once

#include <gmpxx.h>

#include <string>

namespace perron {

// Exact arithmetic everywhere: certificates assert inequalities, and a single
// rounded bound would invalidate them. Floating point is confined to display
// helpers and to the test oracles.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational num/den. Throws internal_error on a zero denominator.
Rat make_rat(Int num, Int den);

/// Parses "p", "p/q" (arbitrary precision, q > 0 after normalization).
Rat parse_rat(const std::string &text);

/// Exact canonical string, "p" or "p/q" (GMP form; q omitted when 1).
std::string rat_to_string(const Rat &value);

/// Decimal rendering of a nonnegative rational to `significant` digits,
/// round-half-up. Display only; never feeds back into any certified bound.
std::string decimal_string(const Rat &value, int significant = 10);

/// Natural log of a positive rational, robust against values far outside
/// double range. Display only.
double approx_log(const Rat &value);

} // namespace perron
