#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ricci {

// Exact arbitrary-precision rational. Backed by GMP; every value handed out
// by this library is canonical (positive denominator, lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q", "p", or "-p/q". Whitespace is not accepted.
Rational parse_rational(const std::string& text);

// Canonical rendering: integers without "/1", otherwise "p/q".
std::string rational_str(const Rational& q);

// Decimal rendering with the given number of digits after the point.
std::string rational_approx(const Rational& q, int digits = 6);

}  // namespace ricci
