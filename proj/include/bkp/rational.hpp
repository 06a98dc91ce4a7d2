#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bkp {

// Arbitrary-precision rationals. gmpxx keeps results of arithmetic in
// lowest terms with a positive denominator.
using Rational = mpq_class;

// p/q in lowest terms. The two-argument mpq_class constructor does not
// reduce, and gmp arithmetic requires reduced operands.
Rational fraction(long p, long q);

// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; the denominator is omitted when it is 1.
std::string to_string(const Rational& value);

}  // namespace bkp
