#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigcolor {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw parts must be canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "a", "-a" or "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace sigcolor
