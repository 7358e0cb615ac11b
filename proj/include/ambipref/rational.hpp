#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ambipref {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "num/den" or a bare integer, with optional leading '-'.
/// Throws Error(MalformedRational) on anything else, including den == 0.
Rational parse_rational(std::string_view text);

/// num / den in lowest terms. mpq_class(num, den) does not reduce.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline const Rational& min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ambipref
