#ifndef MONO_RATIONAL_HPP
#define MONO_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "errors.hpp"

namespace mono {

// Exact scalars. mpq_class keeps denominators positive and fractions
// canonical after every operation, which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q", or a decimal like "3.303" / "-0.05" as an exact rational.
Rational parse_rational(const std::string& text);

// Exact rational from a small decimal, e.g. rational_decimal(33, 1) == 33/10.
inline Rational rational_decimal(long mantissa, unsigned decimals) {
    Int den = 1;
    for (unsigned i = 0; i < decimals; ++i) den *= 10;
    Rational q(Int(mantissa), den);
    q.canonicalize();
    return q;
}

// Plain "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

// Decimal rendering with the given number of fractional digits, truncated
// toward zero. Deterministic, locale-independent.
std::string to_decimal_string(const Rational& q, unsigned digits);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

Rational pow_rational(const Rational& base, unsigned exp);

// Largest k with 2^k <= |q|, for crude magnitude bounds. Requires q != 0.
long floor_log2_abs(const Rational& q);

} // namespace mono

#endif
