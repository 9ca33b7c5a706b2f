#include "ghsurf/oracle.hpp"

#include <mpfr.h>

#include <array>
#include <cstdio>
#include <utility>

#include "ghsurf/errors.hpp"
#include "ghsurf/numtheory.hpp"

namespace ghsurf::oracle {

namespace {

constexpr mpfr_prec_t kPrec = 256;
constexpr auto R = MPFR_RNDN;

// Minimal RAII real; only what the summations need.
class Real {
 public:
  Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  explicit Real(long long x) { mpfr_init2(v_, kPrec); mpfr_set_sj(v_, x, R); }
  Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, R); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
  Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, R); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, R); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, R); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, R); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, R); return r; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

// exp(2*pi*i*j/n)
Complex root_of_unity(long long n, long long j) {
  Real angle;
  mpfr_const_pi(angle.get(), R);
  mpfr_mul_si(angle.get(), angle.get(), 2 * mod(j, n), R);
  mpfr_div_si(angle.get(), angle.get(), n, R);
  Complex z;
  mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), R);
  return z;
}

Complex numeric_sum_reciprocal(long long n, long long k) {
  if (n < 2) throw validation_error("oracle requires n >= 2");
  Complex one{Real(1), Real(0)};
  Complex sum{Real(0), Real(0)};
  for (long long x = 1; x < n; ++x)
    sum = sum + root_of_unity(n, k * x) / (one - root_of_unity(n, x));
  return sum;
}

Complex numeric_index_contribution(long long n, long long p, long long q, long long w) {
  if (n < 2) throw validation_error("oracle requires n >= 2");
  if (gcd_ll(p, n) != 1 || gcd_ll(q, n) != 1)
    throw validation_error("oracle index contribution requires gcd(p,n) = gcd(q,n) = 1");
  Complex one{Real(1), Real(0)};
  Complex two{Real(2), Real(0)};
  Complex sum{Real(0), Real(0)};
  for (long long x = 1; x < n; ++x) {
    Complex num = two * (root_of_unity(n, w * x) - one);
    Complex den = (one - root_of_unity(n, -p * x)) * (one - root_of_unity(n, -q * x));
    sum = sum + num / den;
  }
  Complex nn{Real(n), Real(0)};
  return sum / nn;
}

std::string decimal(const Real& x) {
  std::array<char, 128> buf{};
  mpfr_snprintf(buf.data(), buf.size(), "%.50Rf", x.get());
  return std::string(buf.data());
}

bool within_tolerance(const Complex& numeric, const Rational& exact) {
  Real ex;
  mpfr_set_q(ex.get(), exact.get_mpq_t(), R);
  Real diff = numeric.re - ex;
  mpfr_abs(diff.get(), diff.get(), R);
  Real im_abs = numeric.im;
  mpfr_abs(im_abs.get(), im_abs.get(), R);
  Real tol;
  mpfr_set_str(tol.get(), "1e-30", 10, R);
  return mpfr_cmp(diff.get(), tol.get()) < 0 && mpfr_cmp(im_abs.get(), tol.get()) < 0;
}

}  // namespace

std::string sum_reciprocal_decimal(long long n, long long k) {
  return decimal(numeric_sum_reciprocal(n, k).re);
}

std::string index_contribution_decimal(long long n, long long p, long long q, long long w) {
  return decimal(numeric_index_contribution(n, p, q, w).re);
}

bool agrees_sum_reciprocal(long long n, long long k, const Rational& exact) {
  return within_tolerance(numeric_sum_reciprocal(n, k), exact);
}

bool agrees_index_contribution(long long n, long long p, long long q, long long w, const Rational& exact) {
  return within_tolerance(numeric_index_contribution(n, p, q, w), exact);
}

}  // namespace ghsurf::oracle
