#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ghsurf/surface.hpp"

namespace ghsurf {

/// The six canonical equivariant diffeomorphisms as arithmetic
/// transformations of the triple (a, b, r):
///   c1: (-a, -b, r)
///   c2: (-a, b+ra, r)
///   c3: (a, -b, -r)
///   c4: (b, a, 0), requires r = 0 exactly
///   c5: (a, b, r') with r' = r (mod 2n), requires gcd(a,n) = 1
///   c6: (a, b, r') with r'a = -2b-ra (mod 2n) and r' = r (mod 2),
///       requires gcd(a,n) = 1
/// The c6 parity constraint selects, when a is even, the one of the two
/// solutions mod 2n that preserves the underlying manifold.
enum class MoveKind { c1, c2, c3, c4, c5, c6 };

const char* to_string(MoveKind);

struct MoveStep {
  MoveKind kind;
  std::optional<long long> parameter;  // target r for c5/c6
  GHirzebruchSurface source;
  GHirzebruchSurface target;
};

/// Applies one canonical move; throws validation_error when the move is
/// inapplicable or the c5/c6 parameter violates its congruence.
GHirzebruchSurface apply_move(const GHirzebruchSurface&, MoveKind,
                              std::optional<long long> parameter = std::nullopt);

/// The unique legal c6 target residue in [0, 2n). Requires gcd(a,n) = 1.
long long c6_target_residue(const GHirzebruchSurface&);

/// Canonical point of the finite state space the moves act on. When
/// gcd(a,n) = 1 the c5 move collapses r to its residue mod 2n; otherwise
/// r is held exactly (it is an invariant of the classification there).
struct CanonState {
  long long a = 0;
  long long b = 0;
  bool exact = false;  // true iff gcd(a,n) != 1
  long long r = 0;     // residue in [0,2n) when !exact, exact integer otherwise

  friend bool operator==(const CanonState&, const CanonState&) = default;
};

CanonState canonical_state(const GHirzebruchSurface&);

/// Normal-form order: lexicographic on (a, b), residue states before
/// exact states of equal prefix, residues by value, exact r by magnitude
/// with the non-negative representative first.
bool state_less(const CanonState&, const CanonState&);

/// Materializes a canonical state as a surface (residue states take the
/// representative r in [0, 2n)).
GHirzebruchSurface state_surface(long long n, const CanonState&);

struct OrbitEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  MoveKind kind = MoveKind::c1;
  std::optional<long long> parameter;
};

/// Breadth-first closure of the canonical state space under the moves.
/// Deterministic: neighbors are expanded in the order c1..c6.
struct Orbit {
  long long n = 0;
  std::vector<CanonState> states;  // BFS order; states[0] is the start
  std::vector<OrbitEdge> edges;
  std::vector<std::size_t> parent;      // BFS tree (parent[0] = 0)
  std::vector<MoveKind> parent_kind;

  std::optional<std::size_t> find(const CanonState&) const;
};

/// Throws consistency_error if the closure exceeds state_cap; the state
/// space is finite by construction, so that signals a bug.
Orbit orbit(const GHirzebruchSurface&, std::size_t state_cap = 1'000'000);

/// Outcome of the move-reachability decision procedure. Reachability by
/// canonical moves is the full equivariant diffeomorphism relation, so
/// orbit exhaustion is a sound and complete inequivalence proof; a
/// signature mismatch is reported when available as the faster witness.
struct EquivVerdict {
  enum class Witness { none, signature_mismatch, orbit_exhausted };

  bool equivalent = false;
  std::vector<MoveStep> path;  // composes source to target when equivalent
  Witness witness = Witness::none;
  std::optional<std::pair<Signature, Signature>> signatures;      // mismatch witness
  std::optional<std::pair<std::size_t, std::size_t>> orbit_sizes; // exhaustion witness
};

/// Requires equal group orders.
EquivVerdict decide_equivalence(const GHirzebruchSurface&, const GHirzebruchSurface&);

/// The minimal canonical state in the orbit (under state_less); equal
/// normal forms characterize equivalence.
CanonState normal_form(const GHirzebruchSurface&);

/// One c6 replacement step emitted by normalize_shift_pair; side 'r'
/// is the F_r surface, side 'p' the F_{r'} surface.
struct ShiftPairMove {
  char side = 'r';
  long long r_target = 0;
};

/// Normalization of a comparison pair (F_r, F_{r'}) with r = r' + n and
/// a = 1: brings the data to 0 <= r' < n, b + r' <= n, n <= r < 2n via a
/// simultaneous c6 replacement when b + r' > n. Requires 0 <= 2b <= n.
struct ShiftPairNormalization {
  long long b = 0;
  long long r = 0;
  long long r_prime = 0;
  std::vector<ShiftPairMove> moves;
};

ShiftPairNormalization normalize_shift_pair(long long n, long long b, long long r_prime);

}  // namespace ghsurf
