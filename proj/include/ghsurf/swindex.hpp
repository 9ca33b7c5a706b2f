#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ghsurf/homology.hpp"
#include "ghsurf/rational.hpp"
#include "ghsurf/surface.hpp"

namespace ghsurf::swindex {

/// Fixed point carrying a nonzero bundle weight: (tangent, normal) are the
/// rotation weights there, bundle is the weight of the action on the fiber.
struct WeightedPoint {
  long long tangent = 0;
  long long normal = 0;
  long long bundle = 0;
};

/// An equivariant line bundle, reduced to the data entering the virtual
/// dimension: c1^2, c1 . c1(K), and the weighted fixed points. Points with
/// bundle weight 0 mod n contribute nothing and may be omitted.
struct LineBundleSpec {
  long long c1_square = 0;
  long long c1_dot_k = 0;
  std::vector<WeightedPoint> points;
};

/// d = (1/n)(c1^2 - c1.K) + sum of index contributions; exact rational.
Rational virtual_dimension(const LineBundleSpec&, long long n);

/// One of the four candidate rotation-number assignments at the two fixed
/// points on an invariant (-1)-sphere, with its virtual dimension.
struct ScanAssignment {
  std::array<std::array<long long, 2>, 2> rotations;  // at q1, q2
  Rational dimension;
  bool integral = false;
};

/// Evaluates d over the four sign assignments (+-(1,a) at q1 with bundle
/// weight a, +-(-1,a+1) at q2 with bundle weight a+1). Integrality holds
/// exactly for the assignment (1,a), (-1,a+1); requires n odd and
/// gcd(a,n) = gcd(a+1,n) = 1.
std::vector<ScanAssignment> integrality_scan(long long n, long long a);

using WeightPair = std::array<long long, 2>;

/// Orbifold moduli dimension d = -K.C0/n + 1 - sum (m_i1 + m_i2)/n for a
/// section through two orbifold points with local weights m1, m2 in [0,n).
Rational moduli_dimension(long long n, long long k_dot_c0, const WeightPair& m1, const WeightPair& m2);

/// Same dimension computed through the adjunction identity
/// K.C0 = -C0^2 - 2: d = C0^2/n + 2/n + 1 - sum of weights / n.
Rational moduli_dimension_from_square(long long n, long long c0_square, const WeightPair& m1,
                                      const WeightPair& m2);

/// Which invariant sphere the case analysis is run for: a (-1)-sphere
/// parameterized by the weight a, or a (-r')-sphere parameterized by
/// (b, r').
enum class CaseVariant { minus_one_sphere, minus_r_sphere };

struct SectionCase {
  char label = 'a';   // a..d (degenerate tables use a, b, c)
  WeightPair m1{0, 0};
  WeightPair m2{0, 0};
  long long c0_square = 0;  // value forced by d = 0
  bool contradiction = false;
  /// Required C0^2 class mod 2n for rows where the section passes through
  /// a point set different from the known sphere's; absent otherwise.
  std::optional<long long> congruence;
};

struct SectionCaseTable {
  long long n = 0;
  CaseVariant variant = CaseVariant::minus_one_sphere;
  bool degenerate = false;  // fixed-fiber boundary table
  long long a = 0;          // minus_one_sphere parameter
  long long b = 0;          // minus_r_sphere parameters
  long long r_prime = 0;
  std::vector<SectionCase> cases;
};

/// Case table for an invariant (-1)-sphere with weight a; 0 < a < n-1
/// gives the four-row table, a in {0, n-1} the fixed-fiber two-row table.
SectionCaseTable section_case_table(long long n, long long a);

/// Case table for an invariant (-r')-sphere with fiber weight b;
/// 0 < b < n - r' gives the four-row table, b = 0 or b + r' = n the
/// degenerate one.
SectionCaseTable section_case_table(long long n, long long b, long long r_prime);

struct FilterOutcome {
  long long survivor_c0_square = 0;
  std::vector<char> survivors;
  std::vector<char> eliminated;
};

/// Removes every row whose forced C0^2 violates its homological
/// congruence mod 2n (computed from C0^2 = 2 C.C0 - C^2). Requires n
/// even, n > 2. All surviving rows must agree on one value; throws
/// validation_error when nothing survives.
FilterOutcome congruence_filter(homology::Manifold parity, long long c_square,
                                const SectionCaseTable&);

struct ObstructionVerdict {
  bool unobstructed = false;
  long long unit = 0;   // generator rescale witness
  long long alpha = 0;  // pattern weight witness
};

/// Detects whether the ordered (transverse, fiber) weight pairs match,
/// after some generator rescale u with u*a = +-1, the pattern
/// {(1,alpha), (1,-alpha)} on one invariant fiber and
/// {(-1,alpha+1), (-1,-alpha-1)} on the other — the local data every
/// invariant locally linear (-1)-sphere forces. The fiber pairing is
/// essential: the unordered multisets alone do not distinguish
/// obstructed surfaces. Surfaces with even r are always obstructed:
/// the even intersection form of S^2 x S^2 carries no square -1 class.
ObstructionVerdict minus_one_sphere_obstruction(const GHirzebruchSurface&);

}  // namespace ghsurf::swindex
