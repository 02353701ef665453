#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rnf {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on anything else,
/// including a zero denominator and decimal points.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// p/q in lowest terms. Prefer this to the two-argument mpq_class constructor,
/// which does not canonicalize.
inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Integer power; negative exponents require a nonzero base.
Rational pow(const Rational& base, int exponent);

/// Exact rational square root when one exists.
bool rational_sqrt(const Rational& q, Rational& root);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace rnf
