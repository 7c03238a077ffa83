#pragma once

#include <gmpxx.h>

#include <string>

namespace walkper {

/// Arbitrary-precision integer.
using Integer = mpz_class;
/// Arbitrary-precision rational, kept canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace walkper
