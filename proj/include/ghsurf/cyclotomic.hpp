#pragma once

#include <memory>
#include <vector>

#include "ghsurf/rational.hpp"

namespace ghsurf::cyclo {

namespace detail {
struct FieldContext;
}

/// Maximum admitted field order. phi(n)-degree arithmetic gets slow past
/// a few hundred; orders above the cap are rejected.
long long order_cap();
void set_order_cap(long long cap);

/// An element of Q(zeta_n), stored as coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(n)-1} reduced modulo the n-th cyclotomic
/// polynomial. The reduction is canonical: two elements are equal iff
/// their coefficient vectors are equal.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(long long order, const Rational& constant = Rational(0));

  /// zeta^k in Q(zeta_n); k is taken mod n.
  static CyclotomicNumber zeta_power(long long order, long long k);

  long long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True iff all non-constant coefficients are exactly zero.
  bool is_rational() const;
  /// The constant coefficient; throws consistency_error if not rational.
  Rational to_rational() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber&, const CyclotomicNumber&);
  friend CyclotomicNumber operator-(const CyclotomicNumber&, const CyclotomicNumber&);
  friend CyclotomicNumber operator*(const CyclotomicNumber&, const CyclotomicNumber&);
  /// Field division; the divisor's inverse is found by the extended gcd
  /// of its polynomial with the cyclotomic polynomial.
  friend CyclotomicNumber operator/(const CyclotomicNumber&, const CyclotomicNumber&);
  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&);

  CyclotomicNumber inverse() const;

 private:
  CyclotomicNumber(std::shared_ptr<const detail::FieldContext> ctx, std::vector<Rational> coeffs);

  long long order_;
  std::shared_ptr<const detail::FieldContext> ctx_;
  std::vector<Rational> coeffs_;  // length phi(order), reduced mod Phi_n
};

/// Coefficients of the n-th cyclotomic polynomial Phi_n (index = degree).
std::vector<Integer> cyclotomic_polynomial(long long n);

/// Sum_{x=1}^{n-1} zeta^{kx} / (1 - zeta^x), evaluated exactly in Q(zeta_n).
/// The value is Galois-stable, hence rational.
Rational eval_sum_reciprocal(long long n, long long k);

/// (2*kt - n - 1)/2 with kt = ((k-1) mod n) + 1. Agrees with
/// eval_sum_reciprocal for every n and k; confirmed against the exact
/// summation and the numeric oracle before use (see tests).
Rational sum_reciprocal_closed_form(long long n, long long k);

/// Fixed-point contribution
///   (1/n) * Sum_{x=1}^{n-1} 2(zeta^{wx} - 1) / ((1-zeta^{-px})(1-zeta^{-qx}))
/// for tangent weight p, normal weight q and bundle weight w. Requires
/// gcd(p,n) = gcd(q,n) = 1 so every denominator is invertible (isolated
/// fixed point). The full sum is Galois-stable; a non-rational reduction
/// raises consistency_error.
Rational index_contribution(long long n, long long p, long long q, long long w);

}  // namespace ghsurf::cyclo
