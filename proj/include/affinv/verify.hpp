#pragma once
// Mechanical re-verification of the finite case analyses behind the covering
// and toggling properties of the transformations tau, the construction
// relating concrete atoms to virtual permutations, and an exhaustive check
// of omega-invariance for involution expansions on small ranks.

#include <optional>
#include <string>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/enumerate.hpp"
#include "affinv/involution.hpp"
#include "affinv/schur.hpp"
#include "affinv/tau.hpp"
#include "affinv/virtualperm.hpp"

namespace affinv {

inline std::vector<std::vector<i64>> finite_involutions(i64 m) {
  std::vector<i64> w(static_cast<size_t>(m));
  std::iota(w.begin(), w.end(), i64{1});
  std::vector<std::vector<i64>> out;
  do {
    bool inv = true;
    for (i64 k = 1; k <= m && inv; ++k)
      if (w[static_cast<size_t>(w[static_cast<size_t>(k - 1)] - 1)] != k) inv = false;
    if (inv) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Pattern name: position k prints as the letter of its partner value
// (a=1,...,d=4), uppercase at the positions of i and j.
inline std::string diagram_name(const Diagram& d) {
  std::string s;
  for (i64 k = 1; k <= d.m; ++k) {
    char c = static_cast<char>('a' + d.pattern[static_cast<size_t>(k - 1)] - 1);
    if (d.whites[0] == k || d.whites[1] == k) c = static_cast<char>(c - 'a' + 'A');
    s += c;
  }
  return s;
}

struct CoveringCase {
  std::string name;
  std::vector<i64> y, z;  // one-line words of the flattened involutions
  i64 i = 0, j = 0;
  virt::VirtualPermutation maximal, transformed;
  bool premise_ok = false;  // maximal is a virtual atom for y with (i,j) in Cov
  bool verdict = false;     // transformed is a virtual atom for z
};

// Enumerate the finite covering patterns: involutions y' on m in {2,3,4}
// letters with marked positions i < j such that {i, j, y'(i), y'(j)} = [m]
// and tau_{ij} moves y'. For each, transport the unique maximal virtual atom
// along t_{ij} and test the virtual atom conditions for z' = tau_{ij}(y').
inline std::vector<CoveringCase> verify_covering_cases() {
  std::vector<CoveringCase> out;
  for (i64 m = 2; m <= 4; ++m) {
    for (const auto& yw : finite_involutions(m)) {
      AffineInvolution y = virt::finite_involution(yw);
      for (i64 i = 1; i <= m; ++i)
        for (i64 j = i + 1; j <= m; ++j) {
          std::set<i64> support{i, j, y(i), y(j)};
          if (static_cast<i64>(support.size()) != m) continue;
          Diagram d = diagram(y, i, j);
          if (tau_rule_for(d).action == TauAction::Identity) continue;
          AffineInvolution z = tau(y, i, j);
          CoveringCase c;
          c.name = diagram_name(d);
          c.y = yw;
          c.z = z.perm().window();
          c.i = i;
          c.j = j;
          c.maximal = virt::maximal_virtual_atom(yw, i, j);
          c.premise_ok = virt::is_virtual_atom(c.maximal, yw) &&
                         virt::cov(c.maximal).count({i, j}) > 0;
          c.transformed = virt::act(c.maximal, virt::transposition_word(m, i, j));
          c.verdict = virt::is_virtual_atom(c.transformed, c.z);
          out.push_back(std::move(c));
        }
    }
  }
  if (out.size() != 12) throw Error("expected exactly 12 covering cases");
  return out;
}

struct TogglingCase {
  std::string name;  // classification A1..A3, B1..B3, C1, C2
  std::vector<i64> y;
  std::vector<i64> varpi_inv;  // the atom pi of y with pi <. pi t_{ij}
  i64 i = 0, j = 0, k = 0, l = 0;
  virt::VirtualPermutation maximal, transformed;
  bool premise_ok = false;
  bool verdict = false;  // transformed is again a virtual atom for y
};

// Enumerate the finite toggling patterns: tau_{ij} fixes y' but some atom pi
// of y' has pi <. pi t_{ij}; transporting the maximal virtual atom along
// t_{ij} and then along the toggle partner t_{kl} must land on a virtual
// atom for y' again.
inline std::vector<TogglingCase> verify_toggling_cases() {
  std::vector<TogglingCase> out;
  for (i64 m = 2; m <= 4; ++m) {
    for (const auto& yw : finite_involutions(m)) {
      AffineInvolution y = virt::finite_involution(yw);
      for (i64 i = 1; i <= m; ++i)
        for (i64 j = i + 1; j <= m; ++j) {
          std::set<i64> support{i, j, y(i), y(j)};
          if (static_cast<i64>(support.size()) != m) continue;
          Diagram d = diagram(y, i, j);
          if (tau_rule_for(d).action != TauAction::Identity) continue;
          for (const auto& alpha : atoms(y)) {
            if (alpha(i) > alpha(j) || !bruhat_cover(alpha, i, j)) continue;
            ToggleResult t = toggle(alpha, i, j, y);
            TogglingCase c;
            c.name = t.case_id;
            c.y = yw;
            c.varpi_inv = alpha.window();
            c.i = i;
            c.j = j;
            c.k = t.k;
            c.l = t.l;
            c.maximal = virt::maximal_virtual_atom_for(yw, alpha, i, j);
            c.premise_ok = virt::is_virtual_atom(c.maximal, yw) &&
                           virt::cov(c.maximal).count({i, j}) > 0;
            c.transformed = virt::act(virt::act(c.maximal, virt::transposition_word(m, i, j)),
                                      virt::transposition_word(m, c.k, c.l));
            c.verdict = virt::is_virtual_atom(c.transformed, yw);
            out.push_back(std::move(c));
          }
        }
    }
  }
  if (out.size() != 8) throw Error("expected exactly 8 toggling cases");
  return out;
}

// ----- Vir: the virtual permutation cut out of a concrete affine instance ---

struct VirInstance {
  virt::VirtualPermutation vp;
  std::vector<i64> y_flat;  // flattened involution on the four classes
  i64 i_flat = 0, j_flat = 0;
};

// Build Vir(pi, y, {i, j, y(i), y(j)}): flatten pi's values on E to varpi,
// then record, for every translated copy of E's classes (M), every 2-cycle
// class outside E (D), and every fixed class outside E (S), how the copy
// interleaves with E in positions (domain order) and under pi (codomain
// order). Requires the four values to lie in four distinct residue classes.
inline VirInstance vir(const AffinePermutation& pi, const AffineInvolution& y, i64 i, i64 j) {
  require_same_n(pi, y.perm());
  i64 n = y.n();
  std::set<i64> eset{i, j, y(i), y(j)};
  if (eset.size() != 4) throw Error("vir needs four distinct values");
  std::vector<i64> e(eset.begin(), eset.end());
  std::set<i64> classes;
  for (i64 v : e) classes.insert(floor_mod(v - 1, n));
  if (classes.size() != 4) throw Error("vir needs four distinct residue classes");

  auto flat = [&](i64 x) {
    return static_cast<i64>(std::lower_bound(e.begin(), e.end(), x) - e.begin()) + 1;
  };
  VirInstance inst;
  inst.i_flat = flat(i);
  inst.j_flat = flat(j);
  inst.y_flat.resize(4);
  for (i64 k = 0; k < 4; ++k) inst.y_flat[static_cast<size_t>(k)] = flat(y(e[static_cast<size_t>(k)]));

  inst.vp.m = 4;
  {
    // varpi^{-1} = flattening of (pi(e_1), ..., pi(e_4))
    std::vector<i64> pe, sorted;
    for (i64 k = 0; k < 4; ++k) pe.push_back(pi(e[static_cast<size_t>(k)]));
    sorted = pe;
    std::sort(sorted.begin(), sorted.end());
    std::vector<i64> vinv;
    for (i64 v : pe)
      vinv.push_back(static_cast<i64>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                      sorted.begin()) + 1);
    inst.vp.varpi = virt::one_line_inverse(vinv);
  }

  auto order_by = [](const std::vector<std::pair<i64, i64>>& keyed) {
    std::vector<std::pair<i64, i64>> s = keyed;
    std::sort(s.begin(), s.end());
    virt::LinearOrder o;
    for (auto& [val, item] : s) o.push_back(item);
    return o;
  };

  i64 spread = (e[3] - e[0]) + 2 * max_displacement(pi) + 2 * max_displacement(y.perm());
  i64 T = ceil_div(spread, n) + 3;

  // M: translated negative copies of E itself.
  for (i64 k = 1; k <= T + 2; ++k) {
    std::vector<std::pair<i64, i64>> dom, cod;
    for (i64 a = 1; a <= 4; ++a) {
      i64 va = e[static_cast<size_t>(a - 1)];
      dom.emplace_back(va, a);
      dom.emplace_back(va - k * n, -a);
      cod.emplace_back(pi(va), a);
      cod.emplace_back(pi(va - k * n), -a);
    }
    auto dord = order_by(dom), cord = order_by(cod);
    bool fresh = inst.vp.M[dord].insert(cord).second;
    if (k > T) assert(!fresh && "M stabilization bound too small");
    (void)fresh;
  }
  // D and S: cycle classes disjoint from E.
  for (i64 p = 1; p <= n; ++p) {
    if (classes.count(floor_mod(p - 1, n))) continue;
    i64 q = y(p);
    if (q < p) continue;  // one representative per class pair
    if (q > p && classes.count(floor_mod(q - 1, n))) continue;
    for (i64 t = -(T + 2); t <= T + 2; ++t) {
      std::vector<std::pair<i64, i64>> dom, cod;
      for (i64 a = 1; a <= 4; ++a) {
        i64 va = e[static_cast<size_t>(a - 1)];
        dom.emplace_back(va, a);
        cod.emplace_back(pi(va), a);
      }
      if (q > p) {
        dom.emplace_back(p + t * n, virt::kP);
        dom.emplace_back(q + t * n, virt::kQ);
        cod.emplace_back(pi(p + t * n), virt::kP);
        cod.emplace_back(pi(q + t * n), virt::kQ);
        auto dord = order_by(dom), cord = order_by(cod);
        bool fresh = inst.vp.D[dord].insert(cord).second;
        if (t < -T || t > T) assert(!fresh && "D stabilization bound too small");
        (void)fresh;
      } else {
        dom.emplace_back(p + t * n, virt::kR);
        cod.emplace_back(pi(p + t * n), virt::kR);
        auto dord = order_by(dom), cord = order_by(cod);
        bool fresh = inst.vp.S[dord].insert(cord).second;
        if (t < -T || t > T) assert(!fresh && "S stabilization bound too small");
        (void)fresh;
      }
    }
  }
  return inst;
}

// ----- omega invariance of involution Stanley functions ---------------------

struct OmegaConjectureReport {
  i64 n = 0, max_hat = 0, checked = 0;
  bool ok = true;
  std::optional<AffineInvolution> witness;
};

inline OmegaConjectureReport verify_omega_conjecture(i64 n, i64 max_hat) {
  OmegaConjectureReport rep;
  rep.n = n;
  rep.max_hat = max_hat;
  for (const auto& z : involution_ball(n, max_hat)) {
    SchurExpansion f = to_affine_schur(involution_stanley(z), n);
    ++rep.checked;
    if (omega_plus(f, n) != f) {
      rep.ok = false;
      rep.witness = z;
      return rep;
    }
  }
  return rep;
}

}  // namespace affinv
