#include <doctest.h>

#include <algorithm>
#include <random>

#include "ghsurf/errors.hpp"
#include "ghsurf/homology.hpp"

using namespace ghsurf::homology;

TEST_CASE("intersection pairing") {
  const HomologyClass k_odd = canonical_class(Manifold::odd);
  const HomologyClass fiber{Manifold::odd, 1, -1};  // e0 - e1
  CHECK(intersect(k_odd, fiber) == -2);
  CHECK(intersect(HomologyClass{Manifold::odd, 0, 1}, HomologyClass{Manifold::odd, 0, 1}) == -1);
  CHECK(intersect(HomologyClass{Manifold::even, 1, 0}, HomologyClass{Manifold::even, 0, 1}) == 1);
  CHECK_THROWS_AS(intersect(k_odd, HomologyClass{Manifold::even, 1, 0}), ghsurf::validation_error);

  SUBCASE("symmetric and bilinear") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
      const Manifold m = (rng() % 2) ? Manifold::odd : Manifold::even;
      auto rnd = [&] { return static_cast<long long>(rng() % 41) - 20; };
      const HomologyClass u{m, rnd(), rnd()}, v{m, rnd(), rnd()}, w{m, rnd(), rnd()};
      const long long c = rnd();
      CHECK(intersect(u, v) == intersect(v, u));
      const HomologyClass lin{m, v.x + c * w.x, v.y + c * w.y};
      CHECK(intersect(u, lin) == intersect(u, v) + c * intersect(u, w));
    }
  }
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(Manifold::odd) == HomologyClass{Manifold::odd, -3, 1});
  CHECK(canonical_class(Manifold::even) == HomologyClass{Manifold::even, -2, -2});
  CHECK(self_intersection(canonical_class(Manifold::odd)) == 8);
  CHECK(self_intersection(canonical_class(Manifold::even)) == 8);
}

TEST_CASE("square enumeration") {
  SUBCASE("squares +1 and -1 are represented only by the basis classes") {
    const auto plus = enumerate_square_classes(Manifold::odd, 1, 50);
    REQUIRE(plus.size() == 2);
    CHECK(std::count(plus.begin(), plus.end(), HomologyClass{Manifold::odd, 1, 0}) == 1);
    CHECK(std::count(plus.begin(), plus.end(), HomologyClass{Manifold::odd, -1, 0}) == 1);
    const auto minus = enumerate_square_classes(Manifold::odd, -1, 50);
    REQUIRE(minus.size() == 2);
    CHECK(std::count(minus.begin(), minus.end(), HomologyClass{Manifold::odd, 0, 1}) == 1);
    CHECK(std::count(minus.begin(), minus.end(), HomologyClass{Manifold::odd, 0, -1}) == 1);
  }
  SUBCASE("square 0 within bound 1") {
    const auto zero = enumerate_square_classes(Manifold::odd, 0, 1);
    CHECK(zero.size() == 5);  // (0,0), +-(1,1), +-(1,-1)
  }
  SUBCASE("the factorization argument: a^2 - b^2 = 1 forces (a,b) = (+-1, 0)") {
    for (long long a = -50; a <= 50; ++a)
      for (long long b = -50; b <= 50; ++b)
        if ((a - b) * (a + b) == 1) CHECK(((a == 1 || a == -1) && b == 0));
  }
  SUBCASE("bound must be positive") {
    CHECK_THROWS_AS(enumerate_square_classes(Manifold::odd, 1, 0), ghsurf::validation_error);
  }
}

TEST_CASE("section classes from delta") {
  CHECK(section_class_from_delta(0, Manifold::odd) == HomologyClass{Manifold::odd, 1, 0});
  CHECK(section_class_from_delta(-1, Manifold::odd) == HomologyClass{Manifold::odd, 0, 1});
  CHECK(self_intersection(section_class_from_delta(-1, Manifold::odd)) == -1);
  CHECK(section_class_from_delta(-1, Manifold::even) == HomologyClass{Manifold::even, 1, -1});
  CHECK(self_intersection(section_class_from_delta(-1, Manifold::even)) == -2);

  SUBCASE("squares have the manifold's parity") {
    for (long long d = -30; d <= 30; ++d) {
      CHECK(self_intersection(section_class_from_delta(d, Manifold::odd)) == 2 * d + 1);
      CHECK(self_intersection(section_class_from_delta(d, Manifold::even)) == 2 * d);
    }
  }
  SUBCASE("2 C.C0 = C^2 + C0^2 for section classes; squares -r', r with r-r' = n") {
    // r and r' share a parity, so n is even here
    for (long long n = 2; n <= 20; n += 2) {
      for (long long rp = 0; rp < n; ++rp) {
        const long long r = rp + n;
        if ((rp % 2) == 1) {  // odd squares live on the odd manifold
          const auto c = section_class_from_delta((-rp - 1) / 2, Manifold::odd);
          const auto c0 = section_class_from_delta((r - 1) / 2, Manifold::odd);
          CHECK(self_intersection(c) == -rp);
          CHECK(self_intersection(c0) == r);
          CHECK(2 * intersect(c, c0) == self_intersection(c) + self_intersection(c0));
          CHECK(2 * intersect(c, c0) == n);
        } else {
          const auto c = section_class_from_delta(-rp / 2, Manifold::even);
          const auto c0 = section_class_from_delta(r / 2, Manifold::even);
          CHECK(self_intersection(c) == -rp);
          CHECK(self_intersection(c0) == r);
          CHECK(2 * intersect(c, c0) == self_intersection(c) + self_intersection(c0));
          CHECK(2 * intersect(c, c0) == n);
        }
      }
    }
  }
}

TEST_CASE("conic bundle arithmetic") {
  SUBCASE("canonical class identities for small genus") {
    for (long long g = 1; g <= 10; ++g) {
      const auto k = conic_canonical_class(g);
      const long long k_dot_f = conic_pair(g, k[0], k[1], 0, 1);
      const long long k_sq = conic_pair(g, k[0], k[1], k[0], k[1]);
      const long long k_dot_sigma = conic_pair(g, k[0], k[1], 1, 0);
      const long long sigma_sq = conic_pair(g, 1, 0, 1, 0);
      CHECK(k_dot_f == -2);
      CHECK(k_sq == 8 - (2 + 2 * g));
      CHECK(k_dot_sigma + sigma_sq + 2 == 2 * g);  // adjunction
      CHECK(sigma_sq == 2 + 2 * g);
    }
  }
  SUBCASE("minimality verdicts") {
    const auto v1 = conic_minimality({1});
    CHECK(v1.minimal);
    CHECK(v1.singular_fibers == 4);
    CHECK(conic_minimality({3}).minimal);
    CHECK_THROWS_AS(conic_minimality({0}), ghsurf::validation_error);
    CHECK_THROWS_AS(conic_minimality({-2}), ghsurf::validation_error);
  }
  SUBCASE("basic class SW magnitude is recorded") {
    CHECK(kBasicClassSWMagnitude == 1);
  }
}
