#pragma once
// Covering transformations tau^n_{ij} on affine involutions, the involution
// Bruhat covering sets Phi/Upsilon, the permutation covering sets Psi, both
// transition identities, and the toggling involution on atom covers.
//
// The action of tau_{ij} depends only on the relative order pattern of
// i, j, y(i), y(j) (their "diagram"): the pattern is flattened to an
// involution y' on m = |{i,j,y(i),y(j)}| letters with the positions of i and
// j marked, and looked up in a fixed rule table. A pattern where i and y(j)
// share a residue class (forcing j and y(i) to share one as well) is called
// special; one crossing pattern acts differently in that situation.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/involution.hpp"
#include "affinv/stanley.hpp"

namespace affinv {

// Position argument must start (resp. end) a cycle: p <= y(p) (resp. y(q) <= q).
struct NotACycle : Error { using Error::Error; };
struct NotACycleStart : Error { using Error::Error; };
// toggle() preconditions failed.
struct NotAToggleInstance : Error { using Error::Error; };
// atom_cover_bijection_check needs y <._I z.
struct NotACover : Error { using Error::Error; };

struct Diagram {
  i64 m = 0;                      // number of distinct values among i,j,y(i),y(j)
  std::array<i64, 4> pattern{};   // flattened involution word, zero-padded
  std::array<i64, 2> whites{};    // flattened positions of i and j
  bool special = false;           // i = y(j) + kn for some k != 0
  std::vector<i64> values;        // sorted distinct values of {i,j,y(i),y(j)}
};

inline Diagram diagram(const AffineInvolution& y, i64 i, i64 j) {
  if (i >= j) throw Error("diagram requires i < j");
  if (floor_mod(i - j, y.n()) == 0)
    throw SameResidue("diagram requires i and j in distinct residue classes");
  Diagram d;
  std::set<i64> vals{i, j, y(i), y(j)};
  d.values.assign(vals.begin(), vals.end());
  d.m = static_cast<i64>(d.values.size());
  auto flat = [&](i64 x) {
    return static_cast<i64>(std::lower_bound(d.values.begin(), d.values.end(), x) -
                            d.values.begin()) + 1;
  };
  for (i64 k = 0; k < d.m; ++k)
    d.pattern[static_cast<size_t>(k)] = flat(y(d.values[static_cast<size_t>(k)]));
  d.whites = {flat(i), flat(j)};
  d.special = (i != y(j)) && floor_mod(i - y(j), y.n()) == 0;
  return d;
}

enum class TauAction { Identity, Conjugate, Attach };
// Which reflection participates: t_{ij}, t_{i,y(j)}, or t_{y(i),j}.
enum class TauReflection { None, IJ, IYj, YiJ };

struct TauRule {
  i64 m;
  std::array<i64, 4> pattern;
  std::array<i64, 2> whites;
  int special;  // -1: either, 0: only non-special, 1: only special
  TauAction action;
  TauReflection refl;
};

inline const std::vector<TauRule>& tau_rules() {
  static const std::vector<TauRule> rules = {
      // m = 2: two fixed points attach their reflection; a 2-cycle is inert.
      {2, {1, 2, 0, 0}, {1, 2}, -1, TauAction::Attach, TauReflection::IJ},
      {2, {2, 1, 0, 0}, {1, 2}, -1, TauAction::Identity, TauReflection::None},
      // m = 3: one of i,j fixed, the other in a 2-cycle.
      {3, {1, 3, 2, 0}, {1, 3}, -1, TauAction::Attach, TauReflection::IJ},
      {3, {2, 1, 3, 0}, {1, 3}, -1, TauAction::Attach, TauReflection::IJ},
      {3, {1, 3, 2, 0}, {1, 2}, -1, TauAction::Attach, TauReflection::IYj},
      {3, {2, 1, 3, 0}, {2, 3}, -1, TauAction::Attach, TauReflection::YiJ},
      {3, {3, 2, 1, 0}, {1, 2}, -1, TauAction::Identity, TauReflection::None},
      {3, {3, 2, 1, 0}, {2, 3}, -1, TauAction::Identity, TauReflection::None},
      // m = 4: both i and j in 2-cycles.
      {4, {2, 1, 4, 3}, {2, 3}, -1, TauAction::Conjugate, TauReflection::IJ},
      {4, {3, 4, 1, 2}, {1, 2}, -1, TauAction::Conjugate, TauReflection::IJ},
      {4, {3, 4, 1, 2}, {3, 4}, -1, TauAction::Conjugate, TauReflection::IJ},
      {4, {3, 4, 1, 2}, {1, 4}, 0, TauAction::Conjugate, TauReflection::IYj},
      {4, {3, 4, 1, 2}, {1, 4}, 1, TauAction::Attach, TauReflection::IJ},
      {4, {2, 1, 4, 3}, {1, 4}, -1, TauAction::Attach, TauReflection::IJ},
      {4, {2, 1, 4, 3}, {1, 3}, -1, TauAction::Attach, TauReflection::IYj},
      {4, {2, 1, 4, 3}, {2, 4}, -1, TauAction::Attach, TauReflection::YiJ},
      {4, {3, 4, 1, 2}, {2, 3}, -1, TauAction::Identity, TauReflection::None},
      {4, {4, 3, 2, 1}, {1, 2}, -1, TauAction::Identity, TauReflection::None},
      {4, {4, 3, 2, 1}, {1, 3}, -1, TauAction::Identity, TauReflection::None},
      {4, {4, 3, 2, 1}, {2, 4}, -1, TauAction::Identity, TauReflection::None},
      {4, {4, 3, 2, 1}, {3, 4}, -1, TauAction::Identity, TauReflection::None},
  };
  return rules;
}

inline const TauRule& tau_rule_for(const Diagram& d) {
  const TauRule* found = nullptr;
  for (const auto& r : tau_rules()) {
    if (r.m != d.m || r.pattern != d.pattern || r.whites != d.whites) continue;
    if (r.special != -1 && r.special != (d.special ? 1 : 0)) continue;
    assert(found == nullptr && "tau rule table is ambiguous");
    found = &r;
  }
  if (!found) throw Error("tau rule table has no entry for this diagram");
  return *found;
}

// y with the residue classes of all four diagram values turned into fixed
// points (their partners lie among the same classes, so this is well formed).
inline AffineInvolution strip_classes(const AffineInvolution& y, const std::vector<i64>& values) {
  AffinePermutation p = y.perm();
  for (i64 v : values) p = window_with(p, v, v);
  return AffineInvolution::make(AffinePermutation::make(y.n(), p.window()));
}

inline AffineInvolution tau(const AffineInvolution& y, i64 i, i64 j) {
  Diagram d = diagram(y, i, j);
  const TauRule& rule = tau_rule_for(d);
  i64 a = 0, b = 0;
  switch (rule.refl) {
    case TauReflection::None: return y;
    case TauReflection::IJ: a = i, b = j; break;
    case TauReflection::IYj: a = i, b = y(j); break;
    case TauReflection::YiJ: a = y(i), b = j; break;
  }
  AffinePermutation t = AffinePermutation::transposition(y.n(), a, b);
  if (rule.action == TauAction::Conjugate)
    return AffineInvolution::make(multiply(multiply(t, y.perm()), t));
  return AffineInvolution::make(multiply(t, strip_classes(y, d.values).perm()));
}

// Span bound on j - i when tau_{ij}(y) can be an involution cover of y.
// Write d for max_displacement(y). Any cover z factors through a reflection
// t that covers y in Bruhat order (z = yt or z = tyt with y <. yt), and the
// up-cover span bound gives a reflection width of at most 4d + 1, whence
// max_displacement(z) <= 9d + 2. The reflection applied by a tau rule moves
// some window entry by its own width, so that width is at most
// disp(z) + d + n, and its endpoints sit within d of i and j, giving
// j - i <= disp(z) + 3d + n <= 12d + n + 2. When a target z is already in
// hand, pass its displacement as extra_disp instead of relying on the
// worst-case bound.
inline i64 tau_search_bound(const AffineInvolution& y, i64 extra_disp = 0) {
  i64 n = y.n();
  return 12 * (max_displacement(y.perm()) + extra_disp) + 2 * n + 2;
}

// Does z cover y in the involution Bruhat order? Computed as: hat lengths
// differ by one and z = tau_{ij}(y) for some pair. The test suite checks this
// against the raw poset definition exhaustively on small ranks.
inline bool covers_involution(const AffineInvolution& y, const AffineInvolution& z) {
  require_same_n(y.perm(), z.perm());
  if (hat_length(z) != hat_length(y) + 1) return false;
  i64 B = tau_search_bound(y, max_displacement(z.perm()));
  for (i64 i = 1; i <= y.n(); ++i)
    for (i64 j = i + 1; j <= i + B; ++j) {
      if (floor_mod(i - j, y.n()) == 0) continue;
      if (tau(y, i, j) == z) return true;
    }
  return false;
}

namespace detail {
inline void insert_unique(std::vector<AffineInvolution>& out, const AffineInvolution& z) {
  for (const auto& w : out)
    if (w == z) return;
  out.push_back(z);
}
}  // namespace detail

// Upsilon^-_r: involution covers of y of the form tau_{ir}(y) with i < r and
// i outside the residue classes of both r and y(r).
inline std::vector<AffineInvolution> upsilon_minus(const AffineInvolution& y, i64 r, i64 extra = 0) {
  std::vector<AffineInvolution> out;
  i64 n = y.n();
  i64 B = tau_search_bound(y) + extra;
  for (i64 i = r - B; i < r; ++i) {
    if (floor_mod(i - r, n) == 0 || floor_mod(i - y(r), n) == 0) continue;
    AffineInvolution z = tau(y, i, r);
    if (z != y && hat_length(z) == hat_length(y) + 1) detail::insert_unique(out, z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Upsilon^+_r: involution covers of y of the form tau_{rj}(y) with j > r and
// j outside the residue classes of both r and y(r).
inline std::vector<AffineInvolution> upsilon_plus(const AffineInvolution& y, i64 r, i64 extra = 0) {
  std::vector<AffineInvolution> out;
  i64 n = y.n();
  i64 B = tau_search_bound(y) + extra;
  for (i64 j = r + 1; j <= r + B; ++j) {
    if (floor_mod(j - r, n) == 0 || floor_mod(j - y(r), n) == 0) continue;
    AffineInvolution z = tau(y, r, j);
    if (z != y && hat_length(z) == hat_length(y) + 1) detail::insert_unique(out, z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Phi^-_p for a cycle (p, q=y(p)): {tau_{ip}(y) : i < p, i not in the residue
// classes of p or q, and y <. y t_{ip} in Bruhat order}.
inline std::vector<AffineInvolution> phi_minus(const AffineInvolution& y, i64 p, i64 extra = 0) {
  if (y(p) < p) throw NotACycle("phi_minus needs p <= y(p)");
  i64 q = y(p), n = y.n();
  std::vector<AffineInvolution> out;
  i64 B = tau_search_bound(y) + extra;
  for (i64 i = p - B; i < p; ++i) {
    if (floor_mod(i - p, n) == 0 || floor_mod(i - q, n) == 0) continue;
    if (!bruhat_cover(y.perm(), i, p)) continue;
    detail::insert_unique(out, tau(y, i, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Phi^+_q for a cycle (p=y(q), q): {tau_{qj}(y) : j > q, j outside both
// residue classes, y <. y t_{qj}}.
inline std::vector<AffineInvolution> phi_plus(const AffineInvolution& y, i64 q, i64 extra = 0) {
  if (y(q) > q) throw NotACycle("phi_plus needs y(q) <= q");
  i64 p = y(q), n = y.n();
  std::vector<AffineInvolution> out;
  i64 B = tau_search_bound(y) + extra;
  for (i64 j = q + 1; j <= q + B; ++j) {
    if (floor_mod(j - q, n) == 0 || floor_mod(j - p, n) == 0) continue;
    if (!bruhat_cover(y.perm(), q, j)) continue;
    detail::insert_unique(out, tau(y, q, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Span bound for Bruhat covers pi <. pi t_{ab}: if b - a > 4d + 1 with
// d = max_displacement(pi), then any integer e with a + 2d < e < b - 2d
// (one exists) satisfies pi(a) < pi(e) < pi(b), so the length gap exceeds
// one and the pair cannot be a cover.
inline i64 cover_search_span(const AffinePermutation& p, i64 extra = 0) {
  return 4 * max_displacement(p) + p.n() + extra;
}

// Psi^-_r: Bruhat covers pi <. pi t_{ir} with i < r.
inline std::vector<AffinePermutation> psi_minus(const AffinePermutation& pi, i64 r, i64 extra = 0) {
  std::vector<AffinePermutation> out;
  i64 B = cover_search_span(pi, extra);
  for (i64 i = r - B; i < r; ++i) {
    if (floor_mod(i - r, pi.n()) == 0) continue;
    if (bruhat_cover(pi, i, r))
      out.push_back(multiply(pi, AffinePermutation::transposition(pi.n(), i, r)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Psi^+_r: Bruhat covers pi <. pi t_{rj} with j > r.
inline std::vector<AffinePermutation> psi_plus(const AffinePermutation& pi, i64 r, i64 extra = 0) {
  std::vector<AffinePermutation> out;
  i64 B = cover_search_span(pi, extra);
  for (i64 j = r + 1; j <= r + B; ++j) {
    if (floor_mod(j - r, pi.n()) == 0) continue;
    if (bruhat_cover(pi, r, j))
      out.push_back(multiply(pi, AffinePermutation::transposition(pi.n(), r, j)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct LsTransitionReport {
  i64 r = 0;
  std::vector<AffinePermutation> left, right;
  MonomialExpansion left_sum, right_sum;
  bool equal = false;
};

// Column transition: sum of F over Psi^-_r equals the sum over Psi^+_r.
inline LsTransitionReport check_ls_transition(const AffinePermutation& pi, i64 r, i64 extra = 0) {
  LsTransitionReport rep;
  rep.r = r;
  rep.left = psi_minus(pi, r, extra);
  rep.right = psi_plus(pi, r, extra);
  rep.left_sum = MonomialExpansion(length(pi) + 1);
  rep.right_sum = MonomialExpansion(length(pi) + 1);
  for (const auto& p : rep.left) rep.left_sum = add(rep.left_sum, stanley(p));
  for (const auto& p : rep.right) rep.right_sum = add(rep.right_sum, stanley(p));
  rep.equal = rep.left_sum == rep.right_sum;
  return rep;
}

struct InvTransitionReport {
  i64 p = 0, q = 0;
  std::vector<AffineInvolution> left, right;
  MonomialExpansion left_sum, right_sum;
  bool equal = false;
};

// Involution transition: for a cycle (p,q) of y, the sum of F-hat over
// Phi^-_p equals the sum over Phi^+_q.
inline InvTransitionReport check_involution_transition(const AffineInvolution& y, i64 p,
                                                       i64 extra = 0) {
  if (y(p) < p) throw NotACycleStart("transition needs a cycle minimum p <= y(p)");
  InvTransitionReport rep;
  rep.p = p;
  rep.q = y(p);
  rep.left = phi_minus(y, p, extra);
  rep.right = phi_plus(y, rep.q, extra);
  rep.left_sum = MonomialExpansion(hat_length(y) + 1);
  rep.right_sum = MonomialExpansion(hat_length(y) + 1);
  for (const auto& z : rep.left) rep.left_sum = add(rep.left_sum, involution_stanley(z));
  for (const auto& z : rep.right) rep.right_sum = add(rep.right_sum, involution_stanley(z));
  rep.equal = rep.left_sum == rep.right_sum;
  return rep;
}

// Translate the pair so the first entry lies in [1, n].
inline std::pair<i64, i64> normalize_pair(i64 n, i64 a, i64 b) {
  i64 shift = floor_mod(a - 1, n) + 1 - a;
  return {a + shift, b + shift};
}

// All pairs (a,b), a in [1,n], a < b, giving Bruhat covers pi <. pi t_{ab}.
inline std::vector<std::pair<i64, i64>> up_cover_pairs(const AffinePermutation& pi, i64 extra = 0) {
  std::vector<std::pair<i64, i64>> out;
  i64 B = cover_search_span(pi, extra);
  for (i64 a = 1; a <= pi.n(); ++a)
    for (i64 b = a + 1; b <= a + B; ++b) {
      if (floor_mod(a - b, pi.n()) == 0) continue;
      if (bruhat_cover(pi, a, b)) out.emplace_back(a, b);
    }
  return out;
}

struct ToggleResult {
  AffinePermutation image;      // pi t_{ij} t_{kl}, again an atom of y
  i64 k = 0, l = 0;             // partner reflection, k < l
  std::string case_id;          // classification A1..A3, B1..B3, C1, C2
  i64 partner_count = 0;        // co-cover partners of pi t_{ij} that land in A(y)
};

// Toggling involution on inert atom covers: pi in A(y), pi <. pi t_{ij},
// tau_{ij}(y) = y. Produces the partner (k,l) with tau_{kl}(y) = y and
// pi t_{ij} t_{kl} in A(y); applying toggle there returns (pi, i, j).
inline ToggleResult toggle(const AffinePermutation& pi, i64 i, i64 j, const AffineInvolution& y) {
  require_same_n(pi, y.perm());
  if (!is_atom(pi, y)) throw NotAToggleInstance("pi is not an atom of y");
  if (i >= j || floor_mod(i - j, pi.n()) == 0 || !bruhat_cover(pi, i, j))
    throw NotAToggleInstance("pi t_{ij} must cover pi");
  Diagram d = diagram(y, i, j);
  if (tau_rule_for(d).action != TauAction::Identity)
    throw NotAToggleInstance("tau_{ij} must fix y");

  i64 a = y(i), b = y(j);
  auto key = [&](i64 w1, i64 w2) { return d.whites == std::array<i64, 2>{w1, w2}; };
  i64 k = 0, l = 0;
  std::string case_id;
  if (d.m == 3 && d.pattern == std::array<i64, 4>{3, 2, 1, 0} && key(1, 2)) {
    k = j, l = a;  case_id = "A1";                  // i < j < a, j fixed
  } else if (d.m == 3 && d.pattern == std::array<i64, 4>{3, 2, 1, 0} && key(2, 3)) {
    k = b, l = i;  case_id = "B1";                  // b < i < j, i fixed
  } else if (d.m == 4 && d.pattern == std::array<i64, 4>{4, 3, 2, 1} && key(1, 3)) {
    k = j, l = a;  case_id = "A3";                  // i < b < j < a
  } else if (d.m == 4 && d.pattern == std::array<i64, 4>{4, 3, 2, 1} && key(2, 4)) {
    k = b, l = i;  case_id = "B2";                  // b < i < a < j
  } else if (d.m == 4 && d.pattern == std::array<i64, 4>{4, 3, 2, 1} && key(1, 2)) {
    if (pi(b) < pi(i)) { k = j, l = a;  case_id = "A2"; }   // i < j < b < a
    else               { k = b, l = a;  case_id = "C1"; }
  } else if (d.m == 4 && d.pattern == std::array<i64, 4>{4, 3, 2, 1} && key(3, 4)) {
    if (pi(a) > pi(j)) { k = b, l = i;  case_id = "B3"; }   // b < a < i < j
    else               { k = b, l = a;  case_id = "C2"; }
  } else {
    // Remaining inert diagrams (a 2-cycle {i,j} or the crossing with
    // y(j) < i < j < y(i)) admit no atom with pi(i) < pi(j).
    throw NotAToggleInstance("diagram admits no toggle");
  }
  assert(k < l);
  AffinePermutation mid = multiply(pi, AffinePermutation::transposition(pi.n(), i, j));
  ToggleResult res{multiply(mid, AffinePermutation::transposition(pi.n(), k, l)),
                   k, l, std::move(case_id), 0};

  // Partner multiplicity: co-cover reflections of the middle element whose
  // product is again an atom of y and whose tau fixes y.
  auto norm_ij = normalize_pair(pi.n(), i, j);
  for (i64 aa = 1; aa <= pi.n(); ++aa)
    for (i64 bb = aa + 1; bb <= aa + cover_search_span(mid); ++bb) {
      if (floor_mod(aa - bb, pi.n()) == 0) continue;
      AffinePermutation cand = multiply(mid, AffinePermutation::transposition(pi.n(), aa, bb));
      if (length(cand) != length(mid) - 1 || !bruhat_cover(cand, aa, bb)) continue;
      if (std::make_pair(aa, bb) == norm_ij) continue;
      if (is_atom(cand, y) && tau(y, aa, bb) == y) ++res.partner_count;
    }
  return res;
}

struct AtomCoverBijectionReport {
  bool ok = false;
  i64 pairs = 0;                   // count of (pi, t_{ij}) with tau_{ij}(y) = z
  i64 atoms_of_z = 0;
  std::vector<std::string> issues;
};

// Check that (pi, t) -> pi t, over atoms pi of y and up-covers pi <. pi t
// whose transformation sends y to z, is a bijection onto the atoms of z.
inline AtomCoverBijectionReport atom_cover_bijection_check(const AffineInvolution& y,
                                                           const AffineInvolution& z) {
  if (!covers_involution(y, z)) throw NotACover("z must cover y in involution Bruhat order");
  AtomCoverBijectionReport rep;
  std::vector<AffinePermutation> images;
  for (const auto& pi : atoms(y)) {
    for (auto [i, j] : up_cover_pairs(pi)) {
      if (tau(y, i, j) == z) {
        images.push_back(multiply(pi, AffinePermutation::transposition(pi.n(), i, j)));
        ++rep.pairs;
      }
    }
  }
  std::sort(images.begin(), images.end());
  bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  if (!injective) rep.issues.push_back("map is not injective");
  auto az = atoms(z);
  rep.atoms_of_z = static_cast<i64>(az.size());
  if (images != az) rep.issues.push_back("image set differs from A(z)");
  rep.ok = rep.issues.empty();
  return rep;
}

}  // namespace affinv
