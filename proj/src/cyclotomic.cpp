#include "ghsurf/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <utility>

#include "ghsurf/errors.hpp"
#include "ghsurf/numtheory.hpp"

namespace ghsurf::cyclo {

namespace {

std::atomic<long long> g_order_cap{512};

// Dense polynomials over Q, coeff[i] = coefficient of x^i.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(a.size(), Rational(0));
  const Rational lead = b.back();
  while (degree(a) >= degree(b)) {
    int shift = degree(a) - degree(b);
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

// s with s*a = gcd (mod m); gcd returned as a (nonzero) polynomial.
// m is irreducible here, so the gcd of a nonzero a with m is a constant.
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly m) {
  Poly s0{Rational(1)}, s1{};
  while (!m.empty()) {
    auto [q, r] = divmod(std::move(a), m);
    a = std::move(m);
    m = std::move(r);
    Poly s2 = s0;
    Poly qs1 = mul(q, s1);
    if (qs1.size() > s2.size()) s2.resize(qs1.size(), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {std::move(s0), std::move(a)};  // s0 * input_a = a (mod input_m)
}

std::vector<Integer> cyclotomic_polynomial_z(long long n);

// Exact division of integer polynomials (remainder known to vanish).
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return q;
}

std::vector<Integer> cyclotomic_polynomial_z(long long n) {
  // x^n - 1 divided by Phi_d over every proper divisor d of n.
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, Integer(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long long d : divisors(n)) {
    if (d == n) continue;
    poly = divide_exact(std::move(poly), cyclotomic_polynomial_z(d));
  }
  return poly;
}

}  // namespace

namespace detail {

struct FieldContext {
  long long n = 0;
  long long phi = 0;
  Poly modulus;                    // Phi_n, monic, degree phi
  std::vector<Poly> zeta_powers;   // x^k mod Phi_n for k in [0, n)
};

namespace {

std::shared_ptr<const FieldContext> make_context(long long n) {
  auto ctx = std::make_shared<FieldContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  auto phi_z = cyclotomic_polynomial_z(n);
  ctx->modulus.reserve(phi_z.size());
  for (const auto& c : phi_z) ctx->modulus.emplace_back(c);
  ctx->zeta_powers.resize(static_cast<std::size_t>(n));
  Poly cur{Rational(1)};
  for (long long k = 0; k < n; ++k) {
    ctx->zeta_powers[static_cast<std::size_t>(k)] = cur;
    // multiply by x, reduce the single overflowing term against Phi_n
    cur.insert(cur.begin(), Rational(0));
    if (degree(cur) >= ctx->phi) {
      Rational lead = cur.back();
      cur.pop_back();
      for (long long i = 0; i < ctx->phi; ++i)
        cur[static_cast<std::size_t>(i)] -= lead * ctx->modulus[static_cast<std::size_t>(i)];
      trim(cur);
    }
  }
  return ctx;
}

std::shared_ptr<const FieldContext> field(long long n) {
  if (n < 2) throw validation_error("cyclotomic order must be at least 2");
  if (n > g_order_cap.load()) throw validation_error("cyclotomic order exceeds the configured cap");
  static std::mutex mu;
  static std::map<long long, std::shared_ptr<const FieldContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it != registry.end()) return it->second;
  auto ctx = make_context(n);
  registry.emplace(n, ctx);
  return ctx;
}

}  // namespace
}  // namespace detail

long long order_cap() { return g_order_cap.load(); }
void set_order_cap(long long cap) { g_order_cap.store(cap); }

std::vector<Integer> cyclotomic_polynomial(long long n) {
  if (n < 1) throw validation_error("cyclotomic order must be positive");
  return cyclotomic_polynomial_z(n);
}

CyclotomicNumber::CyclotomicNumber(long long order, const Rational& constant)
    : order_(order), ctx_(detail::field(order)), coeffs_(static_cast<std::size_t>(ctx_->phi), Rational(0)) {
  coeffs_[0] = constant;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::FieldContext> ctx, std::vector<Rational> coeffs)
    : order_(ctx->n), ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(ctx_->phi), Rational(0));
}

CyclotomicNumber CyclotomicNumber::zeta_power(long long order, long long k) {
  auto ctx = detail::field(order);
  const Poly& p = ctx->zeta_powers[static_cast<std::size_t>(mod(k, order))];
  std::vector<Rational> coeffs(p.begin(), p.end());
  return CyclotomicNumber(std::move(ctx), std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw consistency_error("cyclotomic value did not reduce to a rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return CyclotomicNumber(ctx_, std::move(out));
}

namespace {
void require_same_order(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order() != y.order()) throw validation_error("cyclotomic order mismatch");
}
}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  require_same_order(x, y);
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coeffs_[i] + y.coeffs_[i];
  return CyclotomicNumber(x.ctx_, std::move(out));
}

CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  require_same_order(x, y);
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coeffs_[i] - y.coeffs_[i];
  return CyclotomicNumber(x.ctx_, std::move(out));
}

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  require_same_order(x, y);
  Poly a(x.coeffs_.begin(), x.coeffs_.end());
  Poly b(y.coeffs_.begin(), y.coeffs_.end());
  trim(a);
  trim(b);
  Poly prod = mul(a, b);
  if (degree(prod) >= x.ctx_->phi) prod = divmod(std::move(prod), x.ctx_->modulus).second;
  std::vector<Rational> out(prod.begin(), prod.end());
  return CyclotomicNumber(x.ctx_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw validation_error("division by zero in Q(zeta_n)");
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  auto [s, g] = half_ext_gcd(a, ctx_->modulus);
  // Phi_n is irreducible over Q, so g is a nonzero constant.
  if (degree(g) != 0) throw consistency_error("cyclotomic inverse: gcd with Phi_n is not constant");
  for (auto& c : s) c /= g[0];
  if (degree(s) >= ctx_->phi) s = divmod(std::move(s), ctx_->modulus).second;
  std::vector<Rational> out(s.begin(), s.end());
  return CyclotomicNumber(ctx_, std::move(out));
}

CyclotomicNumber operator/(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  require_same_order(x, y);
  return x * y.inverse();
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  return x.order_ == y.order_ && x.coeffs_ == y.coeffs_;
}

Rational eval_sum_reciprocal(long long n, long long k) {
  if (n < 2) throw validation_error("eval_sum_reciprocal requires n >= 2");
  CyclotomicNumber one(n, Rational(1));
  CyclotomicNumber sum(n);
  for (long long x = 1; x < n; ++x) {
    CyclotomicNumber num = CyclotomicNumber::zeta_power(n, k * x);
    CyclotomicNumber den = one - CyclotomicNumber::zeta_power(n, x);
    sum = sum + num / den;
  }
  return sum.to_rational();
}

Rational sum_reciprocal_closed_form(long long n, long long k) {
  if (n < 2) throw validation_error("sum_reciprocal_closed_form requires n >= 2");
  long long kt = mod(k - 1, n) + 1;
  return make_rational(2 * kt - n - 1, 2);
}

Rational index_contribution(long long n, long long p, long long q, long long w) {
  if (n < 2) throw validation_error("index_contribution requires n >= 2");
  if (gcd_ll(p, n) != 1 || gcd_ll(q, n) != 1)
    throw validation_error("index_contribution requires gcd(p,n) = gcd(q,n) = 1 (isolated fixed point)");
  CyclotomicNumber one(n, Rational(1));
  CyclotomicNumber two(n, Rational(2));
  CyclotomicNumber sum(n);
  for (long long x = 1; x < n; ++x) {
    CyclotomicNumber num = two * (CyclotomicNumber::zeta_power(n, w * x) - one);
    CyclotomicNumber den = (one - CyclotomicNumber::zeta_power(n, -p * x)) *
                           (one - CyclotomicNumber::zeta_power(n, -q * x));
    sum = sum + num / den;
  }
  return sum.to_rational() / make_rational(n);
}

}  // namespace ghsurf::cyclo
