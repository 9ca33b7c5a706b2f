#include "ghsurf/swindex.hpp"

#include <algorithm>

#include "ghsurf/cyclotomic.hpp"
#include "ghsurf/errors.hpp"
#include "ghsurf/numtheory.hpp"

namespace ghsurf::swindex {

Rational virtual_dimension(const LineBundleSpec& spec, long long n) {
  if (n < 2) throw validation_error("virtual_dimension requires n >= 2");
  Rational d = make_rational(spec.c1_square - spec.c1_dot_k, n);
  for (const WeightedPoint& pt : spec.points) {
    if (mod(pt.bundle, n) == 0) continue;  // no contribution
    d += cyclo::index_contribution(n, pt.tangent, pt.normal, pt.bundle);
  }
  return d;
}

std::vector<ScanAssignment> integrality_scan(long long n, long long a) {
  if (n < 3 || n % 2 == 0) throw validation_error("integrality_scan requires odd n >= 3");
  a = mod(a, n);
  if (gcd_ll(a, n) != 1 || gcd_ll(a + 1, n) != 1)
    throw validation_error("integrality_scan requires gcd(a,n) = gcd(a+1,n) = 1");

  const std::array<std::array<long long, 2>, 2> q1 = {{{1, a}, {-1, -a}}};
  const std::array<std::array<long long, 2>, 2> q2 = {{{-1, a + 1}, {1, -a - 1}}};

  std::vector<ScanAssignment> out;
  for (const auto& r1 : q1) {
    for (const auto& r2 : q2) {
      ScanAssignment asg;
      asg.rotations = {{{mod(r1[0], n), mod(r1[1], n)}, {mod(r2[0], n), mod(r2[1], n)}}};
      asg.dimension = cyclo::index_contribution(n, r1[0], r1[1], a) +
                      cyclo::index_contribution(n, r2[0], r2[1], a + 1);
      asg.integral = is_integer(asg.dimension);
      out.push_back(std::move(asg));
    }
  }
  return out;
}

namespace {

void check_weights(long long n, const WeightPair& m1, const WeightPair& m2) {
  for (long long w : {m1[0], m1[1], m2[0], m2[1]})
    if (w < 0 || w >= n) throw validation_error("orbifold weights must lie in [0, n)");
}

}  // namespace

Rational moduli_dimension(long long n, long long k_dot_c0, const WeightPair& m1, const WeightPair& m2) {
  if (n < 2) throw validation_error("moduli_dimension requires n >= 2");
  check_weights(n, m1, m2);
  return make_rational(-k_dot_c0, n) + make_rational(1) -
         make_rational(m1[0] + m1[1] + m2[0] + m2[1], n);
}

Rational moduli_dimension_from_square(long long n, long long c0_square, const WeightPair& m1,
                                      const WeightPair& m2) {
  // K.C0 = -C0^2 - 2 for an embedded invariant sphere.
  return moduli_dimension(n, -c0_square - 2, m1, m2);
}

namespace {

SectionCase make_case(char label, long long n, WeightPair m1, WeightPair m2,
                      std::optional<long long> congruence, bool contradiction = false) {
  SectionCase c;
  c.label = label;
  c.m1 = m1;
  c.m2 = m2;
  // d = (C0^2 + n + 2 - sum m)/n; a generic invariant J forces d = 0, so
  // the resolved square is sum m - n - 2.
  c.c0_square = m1[0] + m1[1] + m2[0] + m2[1] - n - 2;
  c.contradiction = contradiction;
  c.congruence = congruence;
  return c;
}

}  // namespace

SectionCaseTable section_case_table(long long n, long long a) {
  if (n < 2) throw validation_error("section_case_table requires n >= 2");
  a = mod(a, n);
  SectionCaseTable t;
  t.n = n;
  t.variant = CaseVariant::minus_one_sphere;
  t.a = a;
  const long long two_n = 2 * n;
  if (a == 0 || a == n - 1) {
    // One invariant fiber is pointwise fixed: two configurations remain.
    t.degenerate = true;
    t.cases.push_back(make_case('a', n, {1, 0}, {1, n - 1}, std::nullopt));
    t.cases.push_back(make_case('b', n, {1, 0}, {1, 1}, mod(1, two_n)));
    return t;
  }
  t.cases.push_back(make_case('a', n, {1, a}, {1, n - a - 1}, std::nullopt));
  t.cases.push_back(make_case('b', n, {1, a}, {1, a + 1}, mod(2 * a + 1, two_n)));
  t.cases.push_back(make_case('c', n, {1, n - a}, {1, n - a - 1}, mod(-2 * a - 1, two_n)));
  t.cases.push_back(make_case('d', n, {1, n - a}, {1, a + 1}, std::nullopt, /*contradiction=*/true));
  return t;
}

SectionCaseTable section_case_table(long long n, long long b, long long r_prime) {
  if (n < 2) throw validation_error("section_case_table requires n >= 2");
  if (r_prime < 0 || r_prime >= n) throw validation_error("section_case_table requires 0 <= r' < n");
  if (b < 0 || b + r_prime > n) throw validation_error("section_case_table requires 0 <= b <= n - r'");
  SectionCaseTable t;
  t.n = n;
  t.variant = CaseVariant::minus_r_sphere;
  t.b = b;
  t.r_prime = r_prime;
  const long long two_n = 2 * n;
  if (b == 0 || b + r_prime == n) {
    t.degenerate = true;
    if (r_prime == 0) {
      // Both invariant fibers would be fixed; the lone configuration is
      // eliminated by its congruence, certifying this cannot occur.
      t.cases.push_back(make_case('c', n, {1, 0}, {1, 0}, mod(0, two_n)));
      return t;
    }
    t.cases.push_back(make_case('a', n, {1, 0}, {1, n - r_prime}, std::nullopt));
    t.cases.push_back(make_case('b', n, {1, 0}, {1, r_prime}, mod(r_prime, two_n)));
    return t;
  }
  t.cases.push_back(make_case('a', n, {1, b}, {1, n - b - r_prime}, std::nullopt));
  t.cases.push_back(make_case('b', n, {1, b}, {1, b + r_prime}, mod(2 * b + r_prime, two_n)));
  t.cases.push_back(make_case('c', n, {1, n - b}, {1, n - b - r_prime}, mod(-2 * b - r_prime, two_n)));
  t.cases.push_back(make_case('d', n, {1, n - b}, {1, b + r_prime}, std::nullopt,
                              /*contradiction=*/r_prime > 0));
  return t;
}

FilterOutcome congruence_filter(homology::Manifold parity, long long c_square,
                                const SectionCaseTable& table) {
  const long long n = table.n;
  if (n <= 2 || n % 2 != 0)
    throw validation_error("congruence_filter requires even n > 2");
  const bool odd_square = mod(c_square, 2) == 1;
  if (odd_square != (parity == homology::Manifold::odd))
    throw validation_error("sphere square parity inconsistent with the manifold");

  const long long two_n = 2 * n;
  FilterOutcome out;
  bool have_value = false;
  for (const SectionCase& c : table.cases) {
    bool alive = !c.contradiction;
    if (alive && c.congruence && mod(c.c0_square, two_n) != *c.congruence) alive = false;
    if (!alive) {
      out.eliminated.push_back(c.label);
      continue;
    }
    if (have_value && out.survivor_c0_square != c.c0_square)
      throw consistency_error("congruence_filter: surviving rows disagree");
    out.survivor_c0_square = c.c0_square;
    have_value = true;
    out.survivors.push_back(c.label);
  }
  if (!have_value) throw validation_error("congruence_filter: no surviving case (inconsistent input)");
  return out;
}

namespace {

using Pair = std::array<long long, 2>;
using FiberPairs = std::array<Pair, 2>;

FiberPairs rescale_sorted(FiberPairs ps, long long u, long long n) {
  for (Pair& p : ps) p = {mod(u * p[0], n), mod(u * p[1], n)};
  std::sort(ps.begin(), ps.end());
  return ps;
}

FiberPairs sorted_pattern(long long first, long long w1, long long w2, long long n) {
  FiberPairs ps = {Pair{mod(first, n), mod(w1, n)}, Pair{mod(first, n), mod(w2, n)}};
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace

ObstructionVerdict minus_one_sphere_obstruction(const GHirzebruchSurface& s) {
  const long long n = s.n;
  // For even r the underlying manifold is S^2 x S^2, whose intersection
  // form is even: no class of square -1 exists, invariant or not.
  if (!is_odd_manifold(s)) return {};
  if (gcd_ll(s.a, n) != 1) return {};  // no rescale can produce transverse weight 1

  const long long f1 = mod(s.b + s.r * s.a, n);
  const FiberPairs fiber0 = {Pair{s.a, s.b}, Pair{s.a, mod(-s.b, n)}};
  const FiberPairs fiber1 = {Pair{mod(-s.a, n), f1}, Pair{mod(-s.a, n), mod(-f1, n)}};

  for (long long u : units(n)) {
    const long long ua = mod(u * s.a, n);
    if (ua != 1 && ua != mod(-1, n)) continue;
    for (int swapped = 0; swapped < 2; ++swapped) {
      const FiberPairs t = rescale_sorted(swapped ? fiber1 : fiber0, u, n);
      const FiberPairs m = rescale_sorted(swapped ? fiber0 : fiber1, u, n);
      if (t[0][0] != 1 || t[1][0] != 1) continue;
      if (m[0][0] != mod(-1, n) || m[1][0] != mod(-1, n)) continue;
      for (long long alpha : {t[0][1], t[1][1]}) {
        if (t == sorted_pattern(1, alpha, -alpha, n) &&
            m == sorted_pattern(-1, alpha + 1, -alpha - 1, n))
          return {true, u, alpha};
      }
    }
  }
  return {};
}

}  // namespace ghsurf::swindex
