#pragma once

#include <gmpxx.h>

#include <string>

namespace ghsurf {

// Exact arithmetic is delegated to GMP; Rational values are always kept in
// canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long long num, long long den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ghsurf
