#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace geovex {

/// Exact rational scalar. All quantities in the library (points, curve
/// parameters, function values, certificate constants) are represented
/// exactly; doubles appear only in numeric cross-checks and black-box
/// function adapters.
using Scalar = mpq_class;

/// Builds a canonical rational from numerator/denominator.
Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p", "p/q" (optionally signed, no whitespace inside the
/// token). Returns nullopt on malformed input or zero denominator.
std::optional<Scalar> parse_scalar(const std::string& text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

/// Exact square root if `value` is the square of a rational, else nullopt.
/// Negative input yields nullopt.
std::optional<Scalar> rational_sqrt(const Scalar& value);

int sign(const Scalar& value);

const Scalar& scalar_zero();
const Scalar& scalar_one();

}  // namespace geovex
