#pragma once

#include <gmpxx.h>

#include <string>

#include "mmsym/errors.hpp"

namespace mmsym {

/// Exact rational scalar.  Values are kept canonical (reduced, positive
/// denominator) by the underlying GMP representation.
using Rational = mpq_class;

/// Parse a rational literal: an optional sign, a decimal integer, and an
/// optional "/denominator" part, e.g. "7", "-3/2", "0".  Throws parse_error
/// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Format a rational as "p" (denominator one) or "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

} // namespace mmsym
