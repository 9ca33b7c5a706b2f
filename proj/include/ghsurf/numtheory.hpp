#pragma once

#include <numeric>
#include <vector>

#include "ghsurf/errors.hpp"

namespace ghsurf {

/// Canonical residue of x in [0, n).
inline long long mod(long long x, long long n) {
  long long m = x % n;
  return m < 0 ? m + n : m;
}

inline long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Extended gcd: returns g = gcd(a,b) and sets x,y with a*x + b*y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  long long x1 = 0, y1 = 0;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long long mod_inverse(long long a, long long n) {
  long long x = 0, y = 0;
  long long g = ext_gcd(mod(a, n), n, x, y);
  if (g != 1) throw validation_error("no inverse: argument is not a unit mod n");
  return mod(x, n);
}

/// Solutions x in [0, m) of a*x = rhs (mod m), in increasing order.
inline std::vector<long long> solve_linear_congruence(long long a, long long rhs, long long m) {
  a = mod(a, m);
  rhs = mod(rhs, m);
  long long g = gcd_ll(a, m);
  if (rhs % g != 0) return {};
  long long m0 = m / g;
  long long x0 = mod((rhs / g) % m0 * mod_inverse(a / g, m0), m0);
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(g));
  for (long long t = 0; t < g; ++t) out.push_back(x0 + t * m0);
  return out;
}

inline long long euler_phi(long long n) {
  long long result = n, m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// The units of Z/n in increasing order.
inline std::vector<long long> units(long long n) {
  std::vector<long long> out;
  for (long long u = 1; u < n; ++u)
    if (gcd_ll(u, n) == 1) out.push_back(u);
  if (n == 1) out.push_back(0);
  return out;
}

}  // namespace ghsurf
