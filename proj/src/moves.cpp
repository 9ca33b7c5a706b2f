#include "ghsurf/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "ghsurf/errors.hpp"
#include "ghsurf/numtheory.hpp"

namespace ghsurf {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::c1: return "c1";
    case MoveKind::c2: return "c2";
    case MoveKind::c3: return "c3";
    case MoveKind::c4: return "c4";
    case MoveKind::c5: return "c5";
    case MoveKind::c6: return "c6";
  }
  return "?";
}

long long c6_target_residue(const GHirzebruchSurface& s) {
  if (gcd_ll(s.a, s.n) != 1) throw validation_error("c6 requires gcd(a,n) = 1");
  const long long two_n = 2 * s.n;
  const long long rhs = mod(-2 * s.b - s.r * s.a, two_n);
  long long found = -1;
  for (long long sol : solve_linear_congruence(s.a, rhs, two_n)) {
    if (mod(sol - s.r, 2) == 0) {
      if (found >= 0) throw consistency_error("c6 target residue is not unique");
      found = sol;
    }
  }
  if (found < 0) throw consistency_error("c6 congruence has no parity-compatible solution");
  return found;
}

GHirzebruchSurface apply_move(const GHirzebruchSurface& s, MoveKind kind,
                              std::optional<long long> parameter) {
  const long long n = s.n;
  switch (kind) {
    case MoveKind::c1:
      if (parameter) throw validation_error("c1 takes no parameter");
      return make_surface(n, -s.a, -s.b, s.r);
    case MoveKind::c2:
      if (parameter) throw validation_error("c2 takes no parameter");
      return make_surface(n, -s.a, s.b + s.r * s.a, s.r);
    case MoveKind::c3:
      if (parameter) throw validation_error("c3 takes no parameter");
      return make_surface(n, s.a, -s.b, -s.r);
    case MoveKind::c4:
      if (parameter) throw validation_error("c4 takes no parameter");
      if (s.r != 0) throw validation_error("c4 requires r = 0");
      return make_surface(n, s.b, s.a, 0);
    case MoveKind::c5: {
      if (gcd_ll(s.a, n) != 1) throw validation_error("c5 requires gcd(a,n) = 1");
      if (!parameter) throw validation_error("c5 requires a target r");
      if (mod(*parameter - s.r, 2 * n) != 0)
        throw validation_error("c5 target must satisfy r' = r (mod 2n)");
      return make_surface(n, s.a, s.b, *parameter);
    }
    case MoveKind::c6: {
      if (gcd_ll(s.a, n) != 1) throw validation_error("c6 requires gcd(a,n) = 1");
      if (!parameter) throw validation_error("c6 requires a target r");
      if (mod(*parameter * s.a + 2 * s.b + s.r * s.a, 2 * n) != 0)
        throw validation_error("c6 target must satisfy r'a = -2b-ra (mod 2n)");
      if (mod(*parameter - s.r, 2) != 0)
        throw validation_error("c6 target must preserve the parity of r");
      return make_surface(n, s.a, s.b, *parameter);
    }
  }
  throw validation_error("unknown move");
}

CanonState canonical_state(const GHirzebruchSurface& s) {
  CanonState st;
  st.a = s.a;
  st.b = s.b;
  if (gcd_ll(s.a, s.n) == 1) {
    st.exact = false;
    st.r = mod(s.r, 2 * s.n);
  } else {
    st.exact = true;
    st.r = s.r;
  }
  return st;
}

bool state_less(const CanonState& x, const CanonState& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.exact != y.exact) return !x.exact;  // residue states first
  if (!x.exact) return x.r < y.r;
  long long ax = x.r < 0 ? -x.r : x.r, ay = y.r < 0 ? -y.r : y.r;
  if (ax != ay) return ax < ay;
  return x.r > y.r;  // non-negative representative first
}

GHirzebruchSurface state_surface(long long n, const CanonState& st) {
  return make_surface(n, st.a, st.b, st.r);
}

namespace {

using StateKey = std::tuple<long long, long long, bool, long long>;

StateKey key_of(const CanonState& s) { return {s.a, s.b, s.exact, s.r}; }

struct Neighbor {
  MoveKind kind;
  std::optional<long long> parameter;
  CanonState state;
};

// Applicable canonical transitions in the fixed order c1..c6. c5 is the
// identity on canonical states and is omitted; when a residue state has
// r = 0 mod 2n, c4 acts through the exact-0 representative.
std::vector<Neighbor> neighbors(long long n, const CanonState& st) {
  std::vector<Neighbor> out;
  const GHirzebruchSurface s = state_surface(n, st);
  for (MoveKind k : {MoveKind::c1, MoveKind::c2, MoveKind::c3}) {
    out.push_back({k, std::nullopt, canonical_state(apply_move(s, k))});
  }
  if (st.r == 0) out.push_back({MoveKind::c4, std::nullopt, canonical_state(apply_move(s, MoveKind::c4))});
  if (!st.exact) {
    long long target = c6_target_residue(s);
    out.push_back({MoveKind::c6, target, canonical_state(apply_move(s, MoveKind::c6, target))});
  }
  return out;
}

struct BfsResult {
  Orbit orbit;
  std::optional<std::size_t> target_index;
};

BfsResult bfs(const GHirzebruchSurface& start, std::size_t state_cap,
              const std::optional<CanonState>& target, bool stop_at_target) {
  BfsResult res;
  Orbit& orb = res.orbit;
  orb.n = start.n;

  std::map<StateKey, std::size_t> index;
  const CanonState s0 = canonical_state(start);
  orb.states.push_back(s0);
  orb.parent.push_back(0);
  orb.parent_kind.push_back(MoveKind::c1);
  index.emplace(key_of(s0), 0);
  if (target && s0 == *target) {
    res.target_index = 0;
    if (stop_at_target) return res;
  }

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : neighbors(orb.n, orb.states[cur])) {
      auto [it, inserted] = index.emplace(key_of(nb.state), orb.states.size());
      if (inserted) {
        if (orb.states.size() >= state_cap)
          throw consistency_error("orbit state space exceeded the configured cap");
        orb.states.push_back(nb.state);
        orb.parent.push_back(cur);
        orb.parent_kind.push_back(nb.kind);
        queue.push_back(it->second);
        if (target && nb.state == *target) {
          res.target_index = it->second;
          if (stop_at_target) {
            orb.edges.push_back({cur, it->second, nb.kind, nb.parameter});
            return res;
          }
        }
      }
      orb.edges.push_back({cur, it->second, nb.kind, nb.parameter});
    }
  }
  return res;
}

// The BFS tree path (move kinds) from the start state to `index`.
std::vector<MoveKind> tree_path(const Orbit& orb, std::size_t index) {
  std::vector<MoveKind> kinds;
  while (index != 0) {
    kinds.push_back(orb.parent_kind[index]);
    index = orb.parent[index];
  }
  std::reverse(kinds.begin(), kinds.end());
  return kinds;
}

// Replays canonical move kinds as concrete surface moves from `from`,
// inserting the implicit c5 steps (before c4, and at the tail to land on
// `to` exactly).
std::vector<MoveStep> materialize(const GHirzebruchSurface& from, const GHirzebruchSurface& to,
                                  const std::vector<MoveKind>& kinds) {
  std::vector<MoveStep> steps;
  GHirzebruchSurface cur = from;
  auto push = [&](MoveKind k, std::optional<long long> param) {
    GHirzebruchSurface next = apply_move(cur, k, param);
    steps.push_back(MoveStep{k, param, cur, next});
    cur = next;
  };
  for (MoveKind k : kinds) {
    switch (k) {
      case MoveKind::c1:
      case MoveKind::c2:
      case MoveKind::c3:
        push(k, std::nullopt);
        break;
      case MoveKind::c4:
        if (cur.r != 0) push(MoveKind::c5, 0);
        push(MoveKind::c4, std::nullopt);
        break;
      case MoveKind::c6:
        push(MoveKind::c6, c6_target_residue(cur));
        break;
      case MoveKind::c5:
        break;  // never emitted by the canonical walk
    }
  }
  if (cur.r != to.r) push(MoveKind::c5, to.r);
  if (!(cur == to)) throw consistency_error("materialized move path does not land on the target");
  return steps;
}

}  // namespace

std::optional<std::size_t> Orbit::find(const CanonState& st) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == st) return i;
  return std::nullopt;
}

Orbit orbit(const GHirzebruchSurface& s, std::size_t state_cap) {
  return bfs(s, state_cap, std::nullopt, false).orbit;
}

EquivVerdict decide_equivalence(const GHirzebruchSurface& s1, const GHirzebruchSurface& s2) {
  if (s1.n != s2.n) throw validation_error("group order mismatch");

  EquivVerdict verdict;
  const Signature sig1 = invariant_signature(s1);
  const Signature sig2 = invariant_signature(s2);
  if (!(sig1 == sig2)) {
    verdict.equivalent = false;
    verdict.witness = EquivVerdict::Witness::signature_mismatch;
    verdict.signatures = std::make_pair(sig1, sig2);
    return verdict;
  }

  const CanonState target = canonical_state(s2);
  BfsResult res = bfs(s1, 1'000'000, target, true);
  if (res.target_index) {
    verdict.equivalent = true;
    verdict.path = materialize(s1, s2, tree_path(res.orbit, *res.target_index));
    return verdict;
  }

  Orbit orb2 = orbit(s2);
  verdict.equivalent = false;
  verdict.witness = EquivVerdict::Witness::orbit_exhausted;
  verdict.orbit_sizes = std::make_pair(res.orbit.states.size(), orb2.states.size());
  return verdict;
}

CanonState normal_form(const GHirzebruchSurface& s) {
  const Orbit orb = orbit(s);
  const CanonState* best = &orb.states.front();
  for (const CanonState& st : orb.states)
    if (state_less(st, *best)) best = &st;
  return *best;
}

ShiftPairNormalization normalize_shift_pair(long long n, long long b, long long r_prime) {
  if (n < 2) throw validation_error("normalize_shift_pair requires n >= 2");
  if (b < 0 || 2 * b > n) throw validation_error("normalize_shift_pair requires 0 <= 2b <= n");
  if (r_prime < 0 || r_prime >= n) throw validation_error("normalize_shift_pair requires 0 <= r' < n");

  ShiftPairNormalization out;
  out.b = b;
  out.r_prime = r_prime;
  out.r = r_prime + n;
  if (b + r_prime > n) {
    // Simultaneous c6 replacement on both surfaces.
    const long long r_new = 4 * n - 2 * b - out.r;
    const long long rp_new = 2 * n - 2 * b - r_prime;
    // both replacements are legal c6 moves on the a = 1 surfaces
    apply_move(make_surface(n, 1, b, out.r), MoveKind::c6, r_new);
    apply_move(make_surface(n, 1, b, r_prime), MoveKind::c6, rp_new);
    out.moves.push_back(ShiftPairMove{'r', r_new});
    out.moves.push_back(ShiftPairMove{'p', rp_new});
    out.r = r_new;
    out.r_prime = rp_new;
  }
  const bool ok = 0 <= out.r_prime && out.r_prime < n && out.b + out.r_prime <= n &&
                  n <= out.r && out.r < 2 * n && out.r == out.r_prime + n;
  if (!ok) throw validation_error("normalize_shift_pair: infeasible input");
  return out;
}

}  // namespace ghsurf
