#pragma once
// Virtual permutations: a finite permutation varpi of [m] together with three
// families of linear orders (M, D, S) recording how bounded windows of an
// affine atom interleave with translated cycles of its involution. Supplies
// the virtual atom conditions, the right action of S_m, the positional cover
// set Cov, and the construction of maximal virtual atoms.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/involution.hpp"

namespace affinv {

// maximal_virtual_atom found no admissible varpi.
struct NoAtomWithCover : Error { using Error::Error; };

namespace virt {

// Items of the linear orders: 1..m, -1..-m, and three sentinels.
constexpr i64 kP = 1001;
constexpr i64 kQ = 1002;
constexpr i64 kR = 1003;

using LinearOrder = std::vector<i64>;
using OrderSet = std::set<LinearOrder>;
using OrderMap = std::map<LinearOrder, OrderSet>;

inline bool before(const LinearOrder& o, i64 a, i64 b) {
  size_t ia = o.size(), ib = o.size();
  for (size_t k = 0; k < o.size(); ++k) {
    if (o[k] == a) ia = k;
    if (o[k] == b) ib = k;
  }
  return ia < o.size() && ib < o.size() && ia < ib;
}

inline bool strictly_between(const LinearOrder& o, i64 a, i64 x, i64 b) {
  return before(o, a, x) && before(o, x, b);
}

// All linear extensions of the given precedence constraints, lexicographically
// ordered by the item encoding.
inline std::vector<LinearOrder> linear_extensions(std::vector<i64> items,
                                                  const std::vector<std::pair<i64, i64>>& constraints) {
  std::sort(items.begin(), items.end());
  std::vector<LinearOrder> out;
  LinearOrder cur;
  std::set<i64> placed;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == items.size()) {
      out.push_back(cur);
      return;
    }
    for (i64 it : items) {
      if (placed.count(it)) continue;
      bool ready = true;
      for (auto [x, y] : constraints)
        if (y == it && !placed.count(x)) { ready = false; break; }
      if (!ready) continue;
      placed.insert(it);
      cur.push_back(it);
      self(self);
      cur.pop_back();
      placed.erase(it);
    }
  };
  rec(rec);
  return out;
}

struct VirtualPermutation {
  i64 m = 0;
  std::vector<i64> varpi;  // one-line word of varpi
  OrderMap M, D, S;
};

inline std::vector<i64> one_line_inverse(const std::vector<i64>& w) {
  std::vector<i64> inv(w.size());
  for (size_t k = 0; k < w.size(); ++k) inv[static_cast<size_t>(w[k] - 1)] = static_cast<i64>(k + 1);
  return inv;
}

// ----- domain and codomain order pools ---------------------------------

inline std::vector<LinearOrder> m_domain_orders(i64 m) {
  std::vector<i64> items;
  std::vector<std::pair<i64, i64>> cons;
  for (i64 t = 1; t <= m; ++t) {
    items.push_back(t);
    items.push_back(-t);
    cons.emplace_back(-t, t);
    if (t < m) {
      cons.emplace_back(t, t + 1);
      cons.emplace_back(-t, -(t + 1));
    }
  }
  return linear_extensions(std::move(items), cons);
}

inline std::vector<LinearOrder> m_codomain_orders(const std::vector<i64>& varpi) {
  i64 m = static_cast<i64>(varpi.size());
  std::vector<i64> items;
  std::vector<std::pair<i64, i64>> cons;
  for (i64 t = 1; t <= m; ++t) {
    items.push_back(t);
    items.push_back(-t);
    cons.emplace_back(-t, t);
  }
  for (i64 k = 0; k + 1 < m; ++k) {
    cons.emplace_back(varpi[static_cast<size_t>(k)], varpi[static_cast<size_t>(k + 1)]);
    cons.emplace_back(-varpi[static_cast<size_t>(k)], -varpi[static_cast<size_t>(k + 1)]);
  }
  return linear_extensions(std::move(items), cons);
}

inline std::vector<LinearOrder> d_domain_orders(i64 m) {
  std::vector<i64> items{kP, kQ};
  std::vector<std::pair<i64, i64>> cons{{kP, kQ}};
  for (i64 t = 1; t <= m; ++t) {
    items.push_back(t);
    if (t < m) cons.emplace_back(t, t + 1);
  }
  return linear_extensions(std::move(items), cons);
}

inline std::vector<LinearOrder> d_codomain_orders(const std::vector<i64>& varpi) {
  i64 m = static_cast<i64>(varpi.size());
  std::vector<i64> items{kP, kQ};
  std::vector<std::pair<i64, i64>> cons;
  for (i64 t = 1; t <= m; ++t) items.push_back(t);
  for (i64 k = 0; k + 1 < m; ++k)
    cons.emplace_back(varpi[static_cast<size_t>(k)], varpi[static_cast<size_t>(k + 1)]);
  return linear_extensions(std::move(items), cons);
}

inline std::vector<LinearOrder> s_domain_orders(i64 m) {
  std::vector<i64> items{kR};
  std::vector<std::pair<i64, i64>> cons;
  for (i64 t = 1; t <= m; ++t) {
    items.push_back(t);
    if (t < m) cons.emplace_back(t, t + 1);
  }
  return linear_extensions(std::move(items), cons);
}

inline std::vector<LinearOrder> s_codomain_orders(const std::vector<i64>& varpi) {
  i64 m = static_cast<i64>(varpi.size());
  std::vector<i64> items{kR};
  std::vector<std::pair<i64, i64>> cons;
  for (i64 t = 1; t <= m; ++t) items.push_back(t);
  for (i64 k = 0; k + 1 < m; ++k)
    cons.emplace_back(varpi[static_cast<size_t>(k)], varpi[static_cast<size_t>(k + 1)]);
  return linear_extensions(std::move(items), cons);
}

// ----- virtual atom conditions ------------------------------------------

using Cycles = std::vector<std::pair<i64, i64>>;

inline Cycles finite_cycles(const std::vector<i64>& y) {
  Cycles out;
  for (i64 a = 1; a <= static_cast<i64>(y.size()); ++a) {
    i64 b = y[static_cast<size_t>(a - 1)];
    if (a <= b) out.emplace_back(a, b);
  }
  return out;
}

// Pairwise interleaving conditions on an M entry, matching the local atom
// criteria applied to a cycle copy on the negative side against one on the
// positive side: crossing copies keep their value order, and when one copy
// nests the other, the inner endpoints may not take values inside the outer
// pair's (reversed) value range.
inline bool m_entry_ok(const LinearOrder& dom, const LinearOrder& cod, const Cycles& cyc) {
  for (auto [a, b] : cyc)
    for (auto [ap, bp] : cyc) {
      if (before(dom, -a, ap) && before(dom, -b, bp) && !before(cod, -a, bp)) return false;
      if (before(dom, a, -ap) && before(dom, b, -bp) && !before(cod, a, -bp)) return false;
      if (before(dom, -a, ap) && before(dom, bp, -b) &&
          (strictly_between(cod, -b, ap, -a) || strictly_between(cod, -b, bp, -a)))
        return false;
      if (before(dom, a, -ap) && before(dom, -bp, b) &&
          (strictly_between(cod, b, -ap, a) || strictly_between(cod, b, -bp, a)))
        return false;
    }
  return true;
}

inline bool d_entry_ok(const LinearOrder& dom, const LinearOrder& cod, const Cycles& cyc) {
  if (!before(cod, kQ, kP)) return false;
  for (auto [a, b] : cyc) {
    if (before(dom, a, kP) && before(dom, kQ, b) &&
        (strictly_between(cod, b, kP, a) || strictly_between(cod, b, kQ, a)))
      return false;
    if (before(dom, kP, a) && before(dom, b, kQ) &&
        (strictly_between(cod, kQ, a, kP) || strictly_between(cod, kQ, b, kP)))
      return false;
    if (before(dom, a, kP) && before(dom, b, kQ) && !before(cod, a, kQ)) return false;
    if (before(dom, kP, a) && before(dom, kQ, b) && !before(cod, kP, b)) return false;
  }
  return true;
}

inline bool s_entry_ok(const LinearOrder& dom, const LinearOrder& cod, const Cycles& cyc) {
  for (auto [a, b] : cyc) {
    if (before(dom, a, kR) && before(dom, kR, b) && strictly_between(cod, b, kR, a)) return false;
    if (before(dom, b, kR) && !before(cod, a, kR)) return false;
    if (before(dom, kR, a) && !before(cod, kR, b)) return false;
  }
  return true;
}

// Positional consecutivity of x, y across a stored (domain, codomain) pair:
// no item lies strictly between them in both orders.
inline bool consecutive_in_pair(const LinearOrder& dom, const LinearOrder& cod, i64 x, i64 y) {
  for (i64 it : dom)
    if (it != x && it != y && strictly_between(dom, x, it, y) && strictly_between(cod, x, it, y))
      return false;
  return true;
}

inline AffineInvolution finite_involution(const std::vector<i64>& y) {
  i64 m = static_cast<i64>(y.size());
  return AffineInvolution::make(AffinePermutation::make(m, y));
}

// Full virtual atom test for a finite involution y given as a one-line word.
inline bool is_virtual_atom(const VirtualPermutation& vp, const std::vector<i64>& y) {
  if (vp.m != static_cast<i64>(y.size()) || vp.m != static_cast<i64>(vp.varpi.size()))
    return false;
  AffineInvolution Y = finite_involution(y);
  AffinePermutation varpi_inv =
      AffinePermutation::make(vp.m, one_line_inverse(vp.varpi));
  if (!is_atom(varpi_inv, Y)) return false;
  Cycles cyc = finite_cycles(y);
  for (const auto& [dom, set] : vp.M)
    for (const auto& cod : set)
      if (!m_entry_ok(dom, cod, cyc)) return false;
  for (const auto& [dom, set] : vp.D)
    for (const auto& cod : set)
      if (!d_entry_ok(dom, cod, cyc)) return false;
  for (const auto& [dom, set] : vp.S)
    for (const auto& cod : set)
      if (!s_entry_ok(dom, cod, cyc)) return false;
  return true;
}

// Positional cover set: pairs i < j with varpi^{-1}(i) < varpi^{-1}(j) that
// stay consecutive in every stored entry (negative copies included for M).
inline std::set<std::pair<i64, i64>> cov(const VirtualPermutation& vp) {
  std::set<std::pair<i64, i64>> out;
  std::vector<i64> vinv = one_line_inverse(vp.varpi);
  for (i64 i = 1; i <= vp.m; ++i)
    for (i64 j = i + 1; j <= vp.m; ++j) {
      if (vinv[static_cast<size_t>(i - 1)] > vinv[static_cast<size_t>(j - 1)]) continue;
      bool ok = true;
      for (const auto& [dom, set] : vp.M) {
        for (const auto& cod : set)
          if (!consecutive_in_pair(dom, cod, i, j) || !consecutive_in_pair(dom, cod, -i, -j)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      auto scan = [&](const OrderMap& om) {
        for (const auto& [dom, set] : om) {
          for (const auto& cod : set)
            if (!consecutive_in_pair(dom, cod, i, j)) return false;
        }
        return true;
      };
      if (ok) ok = scan(vp.D) && scan(vp.S);
      if (ok) out.emplace(i, j);
    }
  return out;
}

// The maximal virtual atom for y with the given varpi^{-1} (an atom of y)
// such that (i,j) lies in Cov: every codomain order passing the atom
// conditions and the consecutivity filter is included.
inline VirtualPermutation maximal_virtual_atom_for(const std::vector<i64>& y,
                                                   const AffinePermutation& varpi_inv,
                                                   i64 i, i64 j) {
  i64 m = static_cast<i64>(y.size());
  VirtualPermutation vp;
  vp.m = m;
  vp.varpi = one_line_inverse(varpi_inv.window());
  Cycles cyc = finite_cycles(y);
  auto m_cod = m_codomain_orders(vp.varpi);
  for (const auto& dom : m_domain_orders(m)) {
    OrderSet s;
    for (const auto& cod : m_cod)
      if (m_entry_ok(dom, cod, cyc) && consecutive_in_pair(dom, cod, i, j) &&
          consecutive_in_pair(dom, cod, -i, -j))
        s.insert(cod);
    vp.M.emplace(dom, std::move(s));
  }
  auto d_cod = d_codomain_orders(vp.varpi);
  for (const auto& dom : d_domain_orders(m)) {
    OrderSet s;
    for (const auto& cod : d_cod)
      if (d_entry_ok(dom, cod, cyc) && consecutive_in_pair(dom, cod, i, j)) s.insert(cod);
    vp.D.emplace(dom, std::move(s));
  }
  auto s_cod = s_codomain_orders(vp.varpi);
  for (const auto& dom : s_domain_orders(m)) {
    OrderSet s;
    for (const auto& cod : s_cod)
      if (s_entry_ok(dom, cod, cyc) && consecutive_in_pair(dom, cod, i, j)) s.insert(cod);
    vp.S.emplace(dom, std::move(s));
  }
  return vp;
}

// All admissible varpi for (y, i, j): atoms of y whose inverse sorts i before j.
inline std::vector<VirtualPermutation> maximal_virtual_atoms(const std::vector<i64>& y, i64 i, i64 j) {
  std::vector<VirtualPermutation> out;
  for (const auto& alpha : atoms(finite_involution(y))) {
    if (alpha(i) < alpha(j)) out.push_back(maximal_virtual_atom_for(y, alpha, i, j));
  }
  return out;
}

inline VirtualPermutation maximal_virtual_atom(const std::vector<i64>& y, i64 i, i64 j) {
  auto all = maximal_virtual_atoms(y, i, j);
  if (all.empty()) throw NoAtomWithCover("no atom of y admits (i,j) in its cover set");
  if (all.size() > 1) throw Error("maximal virtual atom is not unique for this (y,i,j)");
  return all.front();
}

// Right action by a finite permutation sigma (one-line word): codomain orders
// are relabeled by sigma^{-1} on both signs; domains are untouched.
inline VirtualPermutation act(const VirtualPermutation& vp, const std::vector<i64>& sigma) {
  std::vector<i64> sinv = one_line_inverse(sigma);
  auto relabel_item = [&](i64 x) -> i64 {
    if (x >= 1 && x <= vp.m) return sinv[static_cast<size_t>(x - 1)];
    if (x <= -1 && x >= -vp.m) return -sinv[static_cast<size_t>(-x - 1)];
    return x;  // sentinels
  };
  auto relabel_order = [&](const LinearOrder& o) {
    LinearOrder out;
    out.reserve(o.size());
    for (i64 x : o) out.push_back(relabel_item(x));
    return out;
  };
  VirtualPermutation out;
  out.m = vp.m;
  out.varpi.reserve(vp.varpi.size());
  for (i64 v : vp.varpi) out.varpi.push_back(sinv[static_cast<size_t>(v - 1)]);
  auto relabel_map = [&](const OrderMap& om) {
    OrderMap res;
    for (const auto& [dom, set] : om) {
      OrderSet s;
      for (const auto& cod : set) s.insert(relabel_order(cod));
      res.emplace(dom, std::move(s));
    }
    return res;
  };
  out.M = relabel_map(vp.M);
  out.D = relabel_map(vp.D);
  out.S = relabel_map(vp.S);
  return out;
}

inline std::vector<i64> transposition_word(i64 m, i64 i, i64 j) {
  std::vector<i64> w(static_cast<size_t>(m));
  std::iota(w.begin(), w.end(), i64{1});
  std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(j - 1)]);
  return w;
}

inline bool operator==(const VirtualPermutation& a, const VirtualPermutation& b) {
  return a.m == b.m && a.varpi == b.varpi && a.M == b.M && a.D == b.D && a.S == b.S;
}

// Pointwise containment with equal varpi: every stored codomain order of a is
// stored in b under the same domain order.
inline bool contained_in(const VirtualPermutation& a, const VirtualPermutation& b) {
  if (a.m != b.m || a.varpi != b.varpi) return false;
  auto sub = [](const OrderMap& x, const OrderMap& y) {
    for (const auto& [dom, set] : x) {
      if (set.empty()) continue;
      auto it = y.find(dom);
      if (it == y.end()) return false;
      for (const auto& cod : set)
        if (!it->second.count(cod)) return false;
    }
    return true;
  };
  return sub(a.M, b.M) && sub(a.D, b.D) && sub(a.S, b.S);
}

}  // namespace virt
}  // namespace affinv
