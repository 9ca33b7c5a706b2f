#pragma once

#include <array>
#include <string>
#include <vector>

namespace ghsurf::homology {

/// The two rational surfaces carrying the actions: odd is CP^2 # conj(CP^2)
/// with basis e0, e1 (e0^2 = 1, e1^2 = -1, e0.e1 = 0); even is S^2 x S^2
/// with basis e1, e2 (e1^2 = e2^2 = 0, e1.e2 = 1).
enum class Manifold { odd, even };

const char* to_string(Manifold);

struct HomologyClass {
  Manifold manifold = Manifold::odd;
  long long x = 0;  // coefficient of e0 (odd) / e1 (even)
  long long y = 0;  // coefficient of e1 (odd) / e2 (even)

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// The (-1)-class e1 and the fiber class e0-e1 on the odd manifold have
/// Seiberg-Witten invariant of magnitude 1 in the relevant chamber. The
/// value is recorded as a constant (sign undetermined); no gauge theory
/// is modeled here.
inline constexpr long long kBasicClassSWMagnitude = 1;

/// Intersection pairing; throws validation_error on a manifold mismatch.
long long intersect(const HomologyClass&, const HomologyClass&);

long long self_intersection(const HomologyClass&);

/// c1 of the canonical bundle: (-3, 1) on odd, (-2, -2) on even.
HomologyClass canonical_class(Manifold);

/// All classes with |coefficients| <= bound and the given self-intersection.
std::vector<HomologyClass> enumerate_square_classes(Manifold, long long square, long long bound);

/// The section class determined by delta = C.C0: odd (delta+1, -delta)
/// with square 2*delta+1; even (1, delta) with square 2*delta.
HomologyClass section_class_from_delta(long long delta, Manifold);

/// A conic bundle with 2+2g singular fibers whose fixed bisection has
/// genus g >= 1 (fewer than 4 singular fibers cannot occur).
struct ConicBundleData {
  long long genus = 0;
};

/// Pairing on the invariant sublattice spanned by the bisection S and the
/// fiber F: S^2 = 2+2g, S.F = 2, F^2 = 0. Classes are (s, f) coefficient
/// pairs.
long long conic_pair(long long genus, long long s1, long long f1, long long s2, long long f2);

/// Canonical class coefficients in the (bisection, fiber) basis: (-1, g-1).
std::array<long long, 2> conic_canonical_class(long long genus);

struct ConicVerdict {
  bool minimal = false;
  long long genus = 0;
  long long singular_fibers = 0;  // k = 2 + 2g
  std::string equation;           // the integer obstruction that fails
  std::string reason;
  std::string parity_note;        // why no invariant sphere exists either
};

/// Searches for E = a*S + b*F with E.S = 0, E^2 = -2 and F.E even; the
/// constraints force b = -a(1+g) and a^2(1+g) = 1 over the integers,
/// which has no solution for g >= 1. Throws validation_error for g < 1.
ConicVerdict conic_minimality(const ConicBundleData&);

}  // namespace ghsurf::homology
