#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cylindre {

// Exact arithmetic throughout: every coefficient is a canonical mpq
// (coprime numerator/denominator, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow_rational(const Rational& base, unsigned long exp);

/// "num/den" in lowest terms, plain "num" when den == 1.
std::string to_string(const Rational& q);

/// Parses "a", "-a" or "a/b". Throws cylindre::error on malformed input.
Rational rational_from_string(const std::string& text);

/// Closed rational interval [lo, hi].
using Interval = std::pair<Rational, Rational>;

Interval interval_add(const Interval& a, const Interval& b);
Interval interval_mul(const Interval& a, const Interval& b);
Interval interval_pow(const Interval& a, unsigned e);
Interval interval_scale(const Interval& a, const Rational& c);

inline bool interval_contains_zero(const Interval& a) {
    return a.first <= 0 && a.second >= 0;
}

}  // namespace cylindre
