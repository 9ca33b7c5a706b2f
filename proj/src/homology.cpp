#include "ghsurf/homology.hpp"

#include "ghsurf/errors.hpp"
#include "ghsurf/rational.hpp"

namespace ghsurf::homology {

const char* to_string(Manifold m) { return m == Manifold::odd ? "odd" : "even"; }

long long intersect(const HomologyClass& u, const HomologyClass& v) {
  if (u.manifold != v.manifold) throw validation_error("manifold mismatch");
  if (u.manifold == Manifold::odd) return u.x * v.x - u.y * v.y;
  return u.x * v.y + u.y * v.x;
}

long long self_intersection(const HomologyClass& u) { return intersect(u, u); }

HomologyClass canonical_class(Manifold m) {
  if (m == Manifold::odd) return {m, -3, 1};
  return {m, -2, -2};
}

std::vector<HomologyClass> enumerate_square_classes(Manifold m, long long square, long long bound) {
  if (bound < 1) throw validation_error("enumeration bound must be positive");
  std::vector<HomologyClass> out;
  for (long long x = -bound; x <= bound; ++x) {
    for (long long y = -bound; y <= bound; ++y) {
      HomologyClass c{m, x, y};
      if (self_intersection(c) == square) out.push_back(c);
    }
  }
  return out;
}

HomologyClass section_class_from_delta(long long delta, Manifold m) {
  if (m == Manifold::odd) return {m, delta + 1, -delta};
  return {m, 1, delta};
}

long long conic_pair(long long genus, long long s1, long long f1, long long s2, long long f2) {
  return s1 * s2 * (2 + 2 * genus) + 2 * (s1 * f2 + f1 * s2);
}

std::array<long long, 2> conic_canonical_class(long long genus) { return {-1, genus - 1}; }

ConicVerdict conic_minimality(const ConicBundleData& data) {
  const long long g = data.genus;
  if (g < 1) throw validation_error("conic bundle requires genus >= 1 (at least 4 singular fibers)");

  ConicVerdict v;
  v.genus = g;
  v.singular_fibers = 2 + 2 * g;
  // E = a*S + b*F with a, b rational a priori. E.S = 0 forces
  // b = -a(1+g); E^2 = -2 then reads a^2(1+g) = 1, so a^2 = 1/(1+g)
  // exactly. F.E even makes a an integer, and no integer square lies
  // strictly between 0 and 1.
  const Rational a_squared = make_rational(1, 1 + g);
  v.equation = "a^2*(1+g) = 1 with b = -a*(1+g)";
  bool integer_root = false;
  if (is_integer(a_squared)) {
    const long long sq = a_squared.get_num().get_si();
    for (long long a = -1; a * a <= sq; ++a)
      if (a * a == sq) integer_root = true;
  }
  v.minimal = !integer_root;
  v.reason = v.minimal ? "a^2 = 1/(1+g) lies strictly between 0 and 1, so a is not an integer"
                       : "integer solution found";
  v.parity_note =
      "an invariant sphere would have normal weights with m1+m2 = -1 (mod 2), "
      "forcing an isolated fixed point, which the involution does not have";
  return v;
}

}  // namespace ghsurf::homology
