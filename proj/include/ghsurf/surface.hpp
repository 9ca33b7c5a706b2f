#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace ghsurf {

/// The Hirzebruch surface F_r with the homologically trivial holomorphic
/// Z_n-action of weights (a, b). a, b are residues mod n; r is the exact
/// Hirzebruch index (never pre-reduced: in the gcd(a,n) != 1 regime the
/// exact value of r is a classification invariant). The parity of r is
/// the underlying smooth manifold: odd for CP^2 # conj(CP^2), even for
/// S^2 x S^2.
struct GHirzebruchSurface {
  long long n = 0;
  long long a = 0;
  long long b = 0;
  long long r = 0;

  friend bool operator==(const GHirzebruchSurface&, const GHirzebruchSurface&) = default;
};

/// Validates n >= 2 and gcd(a,b,n) = 1 (effective action); reduces a, b
/// into [0, n). Throws validation_error otherwise.
GHirzebruchSurface make_surface(long long n, long long a, long long b, long long r);

inline bool is_odd_manifold(const GHirzebruchSurface& s) { return (s.r % 2 + 2) % 2 == 1; }

/// One of the four distinguished fixed points x_ij = F_i n E_j, with its
/// (transverse, fiber) weight pair.
struct FixedPointDatum {
  std::string label;  // x00, x01, x10, x11
  long long transverse = 0;
  long long fiber = 0;
};

enum class CurveId { E0, E1, F0, F1 };
const char* to_string(CurveId);

struct FixedPointData {
  std::array<FixedPointDatum, 4> points;    // x00, x01, x10, x11
  std::array<long long, 4> curve_isotropy;  // E0, E1, F0, F1: order n/gcd(w,n)
  std::vector<CurveId> fixed_curves;        // curves pointwise fixed by all of G
  bool pseudo_free = false;                 // all nontrivial isotropy isolated
};

/// Weight pairs (a,b), (a,-b), (-a,b+ra), (-a,-b-ra) at x00..x11, the
/// invariant-curve isotropy orders and the pointwise-fixed curves.
FixedPointData fixed_point_data(const GHirzebruchSurface&);

/// Seifert invariants of the orbifold circle bundle underlying the base
/// of F_r(a,b)/G, after rescaling the generator so that a = 1. They
/// satisfy -r/n = beta0/n + beta1/n + euler_e exactly.
struct SeifertData {
  long long n = 0;
  long long beta0 = 0;  // in [0, n)
  long long beta1 = 0;  // in [0, n)
  long long euler_e = 0;
};

/// Requires gcd(a, n) = 1.
SeifertData seifert_data(const GHirzebruchSurface&);

/// The locally linear homeomorphism invariant of the fixed-point set
/// structure. Rotation pairs are canonical up to order swap, per-point
/// simultaneous sign change and a global generator rescale; the bundle
/// records for each invariant curve its isotropy order, and the exact
/// self-intersection when the curve is pointwise fixed (only then is the
/// self-intersection an invariant of the fixed-point set).
struct Signature {
  struct CurveEntry {
    long long isotropy = 0;
    bool fixed = false;
    long long self_intersection = 0;  // meaningful only when fixed
    auto operator<=>(const CurveEntry&) const = default;
  };

  long long n = 0;
  int parity = 0;  // r mod 2; invariant of the underlying manifold
  std::vector<std::array<long long, 2>> pairs;  // 4 canonical pairs, sorted
  std::vector<CurveEntry> curves;               // 4 entries, sorted

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature invariant_signature(const GHirzebruchSurface&);

}  // namespace ghsurf
