#pragma once

#include <gmpxx.h>

#include <string>

namespace semimono {

// Arbitrary-precision integer (geodesic counts, peripheralities).
using BigInt = mpz_class;

// Arbitrary-precision rational in canonical reduced form. All centrality
// scores and comparisons go through this type; no floating point.
using Rational = mpq_class;

// Builds a canonical rational from numerator/denominator.
Rational make_rational(BigInt num, BigInt den);

// Renders "num/den" with den >= 1, e.g. "1/3", "2/1", "0/1", "-5/7".
std::string fraction_str(const Rational& q);

}  // namespace semimono
