#include <doctest.h>

#include <set>
#include <vector>

#include "ghsurf/errors.hpp"
#include "ghsurf/moves.hpp"
#include "ghsurf/numtheory.hpp"

using namespace ghsurf;

namespace {

std::vector<GHirzebruchSurface> all_surfaces(long long n, long long r_lo, long long r_hi) {
  std::vector<GHirzebruchSurface> out;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      if (std::gcd(gcd_ll(a, b), n) != 1) continue;
      for (long long r = r_lo; r <= r_hi; ++r) out.push_back(make_surface(n, a, b, r));
    }
  return out;
}

// Every move applicable at s, with a concrete parameter choice for c5/c6.
std::vector<GHirzebruchSurface> move_images(const GHirzebruchSurface& s) {
  std::vector<GHirzebruchSurface> out;
  out.push_back(apply_move(s, MoveKind::c1));
  out.push_back(apply_move(s, MoveKind::c2));
  out.push_back(apply_move(s, MoveKind::c3));
  if (s.r == 0) out.push_back(apply_move(s, MoveKind::c4));
  if (gcd_ll(s.a, s.n) == 1) {
    for (long long shift : {-2 * s.n, 0LL, 2 * s.n, 4 * s.n})
      out.push_back(apply_move(s, MoveKind::c5, s.r + shift));
    const long long rho = c6_target_residue(s);
    for (long long shift : {-2 * s.n, 0LL, 2 * s.n})
      out.push_back(apply_move(s, MoveKind::c6, rho + shift));
  }
  return out;
}

}  // namespace

TEST_CASE("apply_move frozen examples") {
  SUBCASE("c1 negates a and b") {
    const auto t = apply_move(make_surface(7, 1, 3, 1), MoveKind::c1);
    CHECK(t == make_surface(7, 6, 4, 1));
  }
  SUBCASE("c6 reaches F_7(1,3) from F_1(1,3)") {
    const auto t = apply_move(make_surface(7, 1, 3, 1), MoveKind::c6, 7);
    CHECK(t == make_surface(7, 1, 3, 7));
  }
  SUBCASE("c6 at n = 2") {
    const auto t = apply_move(make_surface(2, 1, 1, 2), MoveKind::c6, 0);
    CHECK(t == make_surface(2, 1, 1, 0));
  }
  SUBCASE("inapplicable moves are rejected") {
    CHECK_THROWS_AS(apply_move(make_surface(7, 1, 3, 1), MoveKind::c4), validation_error);
    CHECK_THROWS_AS(apply_move(make_surface(4, 2, 1, 0), MoveKind::c5, 8), validation_error);
    CHECK_THROWS_AS(apply_move(make_surface(7, 1, 3, 1), MoveKind::c5, 8), validation_error);
    CHECK_THROWS_AS(apply_move(make_surface(7, 1, 3, 1), MoveKind::c6, 8), validation_error);
    // parity guard: 6 solves the c6 congruence at n=7,a=2,b=0,r=1 but flips parity
    CHECK_THROWS_AS(apply_move(make_surface(7, 2, 0, 1), MoveKind::c6, 6), validation_error);
    CHECK_NOTHROW(apply_move(make_surface(7, 2, 0, 1), MoveKind::c6, 13));
  }
}

TEST_CASE("move algebra over small orders") {
  for (long long n = 2; n <= 6; ++n) {
    for (const auto& s : all_surfaces(n, -2 * n, 2 * n)) {
      CAPTURE(n);
      CAPTURE(s.a);
      CAPTURE(s.b);
      CAPTURE(s.r);
      // involutions
      CHECK(apply_move(apply_move(s, MoveKind::c1), MoveKind::c1) == s);
      CHECK(apply_move(apply_move(s, MoveKind::c3), MoveKind::c3) == s);
      CHECK(apply_move(apply_move(s, MoveKind::c2), MoveKind::c2) == s);
      // invariants of every applicable move
      const auto sig = invariant_signature(s);
      for (const auto& t : move_images(s)) {
        CHECK(mod(t.r, 2) == mod(s.r, 2));
        CHECK(invariant_signature(t) == sig);
      }
    }
  }
}

TEST_CASE("orbits") {
  SUBCASE("contain the start and the known targets") {
    const auto orb1 = orbit(make_surface(7, 1, 3, 1));
    CHECK(orb1.states[0] == canonical_state(make_surface(7, 1, 3, 1)));
    CHECK(orb1.find(canonical_state(make_surface(7, 1, 3, 7))).has_value());
    const auto orb2 = orbit(make_surface(7, 3, 1, 11));
    CHECK(orb2.find(canonical_state(make_surface(7, 3, 1, 7))).has_value());
  }
  SUBCASE("deterministic state order") {
    const auto a = orbit(make_surface(6, 1, 1, 2));
    const auto b = orbit(make_surface(6, 1, 1, 2));
    CHECK(a.states == b.states);
    CHECK(a.edges.size() == b.edges.size());
  }
}

TEST_CASE("decide_equivalence") {
  SUBCASE("the order-7 triple") {
    const auto v1 = decide_equivalence(make_surface(7, 1, 3, 1), make_surface(7, 1, 3, 7));
    REQUIRE(v1.equivalent);
    REQUIRE(v1.path.size() == 1);
    CHECK(v1.path[0].kind == MoveKind::c6);
    CHECK(v1.path[0].parameter == 7);

    const auto v2 = decide_equivalence(make_surface(7, 3, 1, 11), make_surface(7, 3, 1, 7));
    CHECK(v2.equivalent);

    const auto v3 = decide_equivalence(make_surface(7, 1, 3, 7), make_surface(7, 3, 1, 7));
    CHECK_FALSE(v3.equivalent);
    CHECK(v3.witness == EquivVerdict::Witness::orbit_exhausted);
  }
  SUBCASE("equal fixed-point data, distinct surfaces at n = 4") {
    const auto s1 = make_surface(4, 1, 3, 1);
    const auto s2 = make_surface(4, 1, 3, 5);
    CHECK(invariant_signature(s1) == invariant_signature(s2));
    const auto v = decide_equivalence(s1, s2);
    CHECK_FALSE(v.equivalent);
    CHECK(v.witness == EquivVerdict::Witness::orbit_exhausted);
    CHECK(v.orbit_sizes.has_value());
  }
  SUBCASE("reflexive with the empty path") {
    const auto s = make_surface(9, 2, 5, 3);
    const auto v = decide_equivalence(s, s);
    CHECK(v.equivalent);
    CHECK(v.path.empty());
  }
  SUBCASE("r and r + 2n are joined by a single c5") {
    const auto v = decide_equivalence(make_surface(8, 1, 2, 3), make_surface(8, 1, 2, 19));
    REQUIRE(v.equivalent);
    REQUIRE(v.path.size() == 1);
    CHECK(v.path[0].kind == MoveKind::c5);
    CHECK(v.path[0].parameter == 19);
  }
  SUBCASE("path composes source to target") {
    const auto s1 = make_surface(8, 1, 2, 3);
    const auto s2 = make_surface(8, 1, 2, 19);  // c5 shift by 2n
    const auto v = decide_equivalence(s1, s2);
    REQUIRE(v.equivalent);
    GHirzebruchSurface cur = s1;
    for (const auto& step : v.path) {
      CHECK(step.source == cur);
      cur = apply_move(cur, step.kind, step.parameter);
      CHECK(step.target == cur);
    }
    CHECK(cur == s2);
  }
  SUBCASE("symmetry on samples") {
    const auto s1 = make_surface(6, 1, 5, 2);
    const auto s2 = make_surface(6, 1, 5, 14);
    CHECK(decide_equivalence(s1, s2).equivalent == decide_equivalence(s2, s1).equivalent);
    const auto t1 = make_surface(5, 1, 2, 0);
    const auto t2 = make_surface(5, 2, 1, 4);
    CHECK(decide_equivalence(t1, t2).equivalent == decide_equivalence(t2, t1).equivalent);
  }
  SUBCASE("order mismatch") {
    CHECK_THROWS_AS(decide_equivalence(make_surface(5, 1, 1, 0), make_surface(7, 1, 1, 0)),
                    validation_error);
  }
}

TEST_CASE("normal form") {
  SUBCASE("frozen equalities") {
    CHECK(normal_form(make_surface(7, 1, 3, 1)) == normal_form(make_surface(7, 1, 3, 7)));
    CHECK(normal_form(make_surface(2, 1, 1, 0)) == normal_form(make_surface(2, 1, 1, 2)));
    CHECK(normal_form(make_surface(2, 1, 1, 1)) == normal_form(make_surface(2, 1, 1, 3)));
  }
  SUBCASE("separates the inequivalent pair") {
    CHECK_FALSE(normal_form(make_surface(4, 1, 3, 1)) == normal_form(make_surface(4, 1, 3, 5)));
    CHECK_FALSE(normal_form(make_surface(7, 1, 3, 7)) == normal_form(make_surface(7, 3, 1, 7)));
  }
  SUBCASE("idempotent") {
    for (const auto& s : all_surfaces(5, -5, 5)) {
      const CanonState nf = normal_form(s);
      CHECK(normal_form(state_surface(s.n, nf)) == nf);
    }
  }
}

TEST_CASE("shift-pair normalization") {
  SUBCASE("already normalized") {
    const auto out = normalize_shift_pair(4, 1, 1);
    CHECK(out.b == 1);
    CHECK(out.r == 5);
    CHECK(out.r_prime == 1);
    CHECK(out.moves.empty());
  }
  SUBCASE("replacement branch") {
    const auto out1 = normalize_shift_pair(8, 3, 7);
    CHECK(out1.b == 3);
    CHECK(out1.r == 11);
    CHECK(out1.r_prime == 3);
    CHECK(out1.moves.size() == 2);
    const auto out2 = normalize_shift_pair(6, 3, 5);
    CHECK(out2.b == 3);
    CHECK(out2.r == 7);
    CHECK(out2.r_prime == 1);
  }
  SUBCASE("all four inequalities hold for every admissible input") {
    for (long long n = 2; n <= 20; ++n)
      for (long long b = 0; 2 * b <= n; ++b)
        for (long long rp = 0; rp < n; ++rp) {
          const auto out = normalize_shift_pair(n, b, rp);
          CHECK(out.r_prime >= 0);
          CHECK(out.r_prime < n);
          CHECK(out.b + out.r_prime <= n);
          CHECK(out.r >= n);
          CHECK(out.r < 2 * n);
          CHECK(out.r == out.r_prime + n);
        }
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(normalize_shift_pair(6, 4, 1), validation_error);   // 2b > n
    CHECK_THROWS_AS(normalize_shift_pair(6, 1, 6), validation_error);   // r' >= n
  }
}
