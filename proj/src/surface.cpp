#include "ghsurf/surface.hpp"

#include <algorithm>

#include "ghsurf/errors.hpp"
#include "ghsurf/numtheory.hpp"

namespace ghsurf {

namespace {
// Keeps every downstream product (b + r*a, congruences mod 2n) inside
// 64-bit range; far beyond any order the state caps admit.
constexpr long long kMaxOrder = 1'000'000;
constexpr long long kMaxIndexMagnitude = 1'000'000'000'000LL;
}  // namespace

GHirzebruchSurface make_surface(long long n, long long a, long long b, long long r) {
  if (n < 2) throw validation_error("group order n must be at least 2");
  if (n > kMaxOrder) throw validation_error("group order n exceeds the supported range");
  if (r < -kMaxIndexMagnitude || r > kMaxIndexMagnitude)
    throw validation_error("index r exceeds the supported range");
  a = mod(a, n);
  b = mod(b, n);
  if (std::gcd(gcd_ll(a, b), n) != 1) throw validation_error("gcd(a,b,n) must be 1");
  return GHirzebruchSurface{n, a, b, r};
}

const char* to_string(CurveId c) {
  switch (c) {
    case CurveId::E0: return "E0";
    case CurveId::E1: return "E1";
    case CurveId::F0: return "F0";
    case CurveId::F1: return "F1";
  }
  return "?";
}

FixedPointData fixed_point_data(const GHirzebruchSurface& s) {
  const long long n = s.n;
  const long long fiber1 = mod(s.b + s.r * s.a, n);  // weight along F1

  FixedPointData out;
  out.points = {FixedPointDatum{"x00", s.a, s.b},
                FixedPointDatum{"x01", s.a, mod(-s.b, n)},
                FixedPointDatum{"x10", mod(-s.a, n), fiber1},
                FixedPointDatum{"x11", mod(-s.a, n), mod(-fiber1, n)}};

  const long long ga = gcd_ll(s.a, n);
  const long long gb = gcd_ll(s.b, n);
  const long long gf1 = gcd_ll(fiber1, n);
  out.curve_isotropy = {n / ga, n / ga, n / gb, n / gf1};

  if (s.a == 0) {
    out.fixed_curves.push_back(CurveId::E0);
    out.fixed_curves.push_back(CurveId::E1);
  }
  if (s.b == 0) out.fixed_curves.push_back(CurveId::F0);
  if (fiber1 == 0) out.fixed_curves.push_back(CurveId::F1);

  out.pseudo_free = (ga == 1 && gb == 1 && gf1 == 1);
  return out;
}

SeifertData seifert_data(const GHirzebruchSurface& s) {
  if (gcd_ll(s.a, s.n) != 1)
    throw validation_error("seifert_data requires gcd(a,n) = 1");
  // Rescale the generator so that a = 1.
  const long long inv_a = mod_inverse(s.a, s.n);
  const long long b1 = mod(s.b * inv_a, s.n);
  SeifertData d;
  d.n = s.n;
  d.beta0 = b1;
  d.beta1 = mod(-b1 - s.r, s.n);
  d.euler_e = (-s.r - d.beta0 - d.beta1) / s.n;
  return d;
}

namespace {

std::array<long long, 2> canonical_pair(long long p, long long q, long long n) {
  std::array<std::array<long long, 2>, 4> reps = {{{mod(p, n), mod(q, n)},
                                                   {mod(q, n), mod(p, n)},
                                                   {mod(-p, n), mod(-q, n)},
                                                   {mod(-q, n), mod(-p, n)}}};
  return *std::min_element(reps.begin(), reps.end());
}

}  // namespace

Signature invariant_signature(const GHirzebruchSurface& s) {
  const long long n = s.n;
  const FixedPointData fp = fixed_point_data(s);

  Signature sig;
  sig.n = n;
  sig.parity = static_cast<int>(mod(s.r, 2));

  // Minimize the sorted canonical pair list over all generator rescales.
  bool first = true;
  for (long long u : units(n)) {
    std::vector<std::array<long long, 2>> pairs;
    pairs.reserve(4);
    for (const auto& pt : fp.points)
      pairs.push_back(canonical_pair(u * pt.transverse, u * pt.fiber, n));
    std::sort(pairs.begin(), pairs.end());
    if (first || pairs < sig.pairs) {
      sig.pairs = std::move(pairs);
      first = false;
    }
  }

  // Isotropy orders are rescale-invariant; self-intersections (-r, r, 0, 0)
  // for (E0, E1, F0, F1) are recorded only on pointwise-fixed curves.
  const std::array<long long, 4> self_int = {-s.r, s.r, 0, 0};
  const std::array<CurveId, 4> ids = {CurveId::E0, CurveId::E1, CurveId::F0, CurveId::F1};
  for (int i = 0; i < 4; ++i) {
    bool fixed = std::find(fp.fixed_curves.begin(), fp.fixed_curves.end(), ids[static_cast<std::size_t>(i)]) !=
                 fp.fixed_curves.end();
    sig.curves.push_back(Signature::CurveEntry{fp.curve_isotropy[static_cast<std::size_t>(i)], fixed,
                                               fixed ? self_int[static_cast<std::size_t>(i)] : 0});
  }
  std::sort(sig.curves.begin(), sig.curves.end());
  return sig;
}

}  // namespace ghsurf
