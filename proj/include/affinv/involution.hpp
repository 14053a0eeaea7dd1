#pragma once
// Affine involutions and their atom sets: minimal-length permutations pi with
// pi^{-1} o pi = z under the 0-Hecke product, plus involution codes, visible
// descents, the bracket construction for alpha_min/alpha_max, and the local
// pattern criterion for atom membership.

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/expansion.hpp"
#include "affinv/partition.hpp"
#include "affinv/stanley.hpp"

namespace affinv {

// Cycle list mentions a residue class more than once.
struct OverlappingCycles : Error { using Error::Error; };

class AffineInvolution {
 public:
  static AffineInvolution make(AffinePermutation p) {
    if (multiply(p, p) != AffinePermutation::identity(p.n()))
      throw Error("not an involution");
    return AffineInvolution(std::move(p));
  }

  const AffinePermutation& perm() const { return p_; }
  i64 n() const { return p_.n(); }
  i64 operator()(i64 i) const { return p_(i); }

  friend bool operator==(const AffineInvolution& a, const AffineInvolution& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const AffineInvolution& a, const AffineInvolution& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineInvolution& a, const AffineInvolution& b) {
    return a.p_ < b.p_;
  }

 private:
  explicit AffineInvolution(AffinePermutation p) : p_(std::move(p)) {}
  AffinePermutation p_;
};

// Product of the reflections t_{a,b} over the given disjoint cycles.
inline AffineInvolution involution_from_cycles(i64 n, const std::vector<std::pair<i64, i64>>& cycles) {
  std::set<i64> used;
  AffinePermutation p = AffinePermutation::identity(n);
  for (auto [a, b] : cycles) {
    if (floor_mod(a - b, n) == 0)
      throw SameResidue("cycle endpoints must lie in distinct residue classes");
    for (i64 x : {a, b})
      if (!used.insert(floor_mod(x - 1, n)).second)
        throw OverlappingCycles("residue class appears in two cycles");
    p = multiply(p, AffinePermutation::transposition(n, a, b));
  }
  return AffineInvolution::make(std::move(p));
}

// One representative (a, z(a)) with a in [1,n] per translation class of
// cycles, fixed points included, ordered by a.
inline std::vector<std::pair<i64, i64>> cycle_set(const AffineInvolution& z) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 1; a <= z.n(); ++a)
    if (z(a) >= a) out.emplace_back(a, z(a));
  return out;
}

inline std::vector<std::pair<i64, i64>> two_cycles(const AffineInvolution& z) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 1; a <= z.n(); ++a)
    if (z(a) > a) out.emplace_back(a, z(a));
  return out;
}

// Number of residue classes minus the number of orbits of z on them.
inline i64 ell_prime(const AffineInvolution& z) {
  i64 n = z.n(), paired = 0;
  for (i64 a = 1; a <= n; ++a)
    if (floor_mod(z(a) - a, n) != 0) ++paired;
  return paired / 2;
}

inline i64 hat_length(const AffineInvolution& z) {
  i64 l = length(z.perm()), lp = ell_prime(z);
  assert((l + lp) % 2 == 0);
  return (l + lp) / 2;
}

inline std::set<i64> visible_descents(const AffineInvolution& z) {
  std::set<i64> out;
  for (i64 i = 1; i <= z.n(); ++i)
    if (z(i) > z(i + 1) && i >= z(i + 1)) out.insert(i);
  return out;
}

// Involution code: c^_i = #{j > i : z(i) > z(j) and z(j) <= i}.
inline std::vector<i64> involution_code(const AffineInvolution& z) {
  i64 n = z.n(), bound = max_displacement(z.perm()) + n + 1;
  std::vector<i64> c(static_cast<size_t>(n), 0);
  for (i64 i = 1; i <= n; ++i)
    for (i64 j = i + 1; j <= i + bound; ++j)
      if (z(i) > z(j) && z(j) <= i) ++c[static_cast<size_t>(i - 1)];
  return c;
}

inline Partition mu_shape(const AffineInvolution& z) {
  return Partition::sorted_from(involution_code(z)).transpose();
}

// Bracket construction: scan the list left to right keeping the first value
// in each residue class; the n survivors are the values of an affine
// permutation on n consecutive positions starting after some offset.
inline AffinePermutation bracket_window(i64 n, const std::vector<i64>& values) {
  std::set<i64> seen;
  std::vector<i64> kept;
  for (i64 v : values) {
    if (seen.insert(floor_mod(v - 1, n)).second) kept.push_back(v);
  }
  if (static_cast<i64>(kept.size()) != n)
    throw Error("bracket list must cover all n residue classes");
  i64 sum = std::accumulate(kept.begin(), kept.end(), i64{0});
  i64 base = n * (n + 1) / 2;
  if (floor_mod(sum - base, n) != 0)
    throw Error("bracket list does not align to an integer offset");
  i64 offset = (sum - base) / n;  // kept[k] sits at position offset+k+1
  std::vector<i64> win(static_cast<size_t>(n));
  for (i64 k = 0; k < n; ++k) {
    i64 pos = offset + k + 1;
    i64 r = floor_mod(pos - 1, n);
    win[static_cast<size_t>(r)] = kept[static_cast<size_t>(k)] - (pos - 1 - r);
  }
  return AffinePermutation::make(n, std::move(win));
}

// Minimal atom: inverse of [[z(a_1), a_1, z(a_2), a_2, ...]] over the cycle
// representatives (a, z(a)) with a <= z(a), a ascending.
inline AffinePermutation alpha_min(const AffineInvolution& z) {
  std::vector<i64> seq;
  for (auto [a, b] : cycle_set(z)) {
    seq.push_back(b);
    seq.push_back(a);
  }
  return inverse(bracket_window(z.n(), seq));
}

// Maximal atom: inverse of [[b_1, z(b_1), b_2, z(b_2), ...]] over the
// representatives b in [1,n] with z(b) <= b, b ascending.
inline AffinePermutation alpha_max(const AffineInvolution& z) {
  std::vector<i64> seq;
  for (i64 b = 1; b <= z.n(); ++b) {
    if (z(b) <= b) {
      seq.push_back(b);
      seq.push_back(z(b));
    }
  }
  return inverse(bracket_window(z.n(), seq));
}

inline bool is_atom(const AffinePermutation& p, const AffineInvolution& z) {
  require_same_n(p, z.perm());
  return length(p) == hat_length(z) && hecke_product(inverse(p), p) == z.perm();
}

namespace detail {

// Write the three given values at consecutive positions pos, pos+1, pos+2.
inline AffinePermutation with_triple(const AffinePermutation& v, i64 pos, i64 x, i64 y, i64 w) {
  AffinePermutation out = window_with(v, pos, x);
  out = window_with(out, pos + 1, y);
  out = window_with(out, pos + 2, w);
  return AffinePermutation::make(out.n(), out.window());  // re-validate
}

// Directed atom-order moves on an inverse-atom window v: a consecutive value
// pattern (c,a,b) with a < b < c becomes (b,c,a).
inline std::vector<AffinePermutation> directed_moves(const AffinePermutation& v) {
  std::vector<AffinePermutation> out;
  for (i64 p = 1; p <= v.n(); ++p) {
    i64 x = v(p), y = v(p + 1), w = v(p + 2);
    if (y < w && w < x) out.push_back(with_triple(v, p, w, x, y));
  }
  return out;
}

// Undirected Hecke-atom moves: any of the patterns (c,b,a), (c,a,b), (b,c,a)
// on consecutive positions may be replaced by the other two.
inline std::vector<AffinePermutation> undirected_moves(const AffinePermutation& v) {
  std::vector<AffinePermutation> out;
  for (i64 p = 1; p <= v.n(); ++p) {
    i64 x = v(p), y = v(p + 1), w = v(p + 2);
    i64 a = std::min({x, y, w}), c = std::max({x, y, w});
    i64 b = x + y + w - a - c;
    if (a == b || b == c) continue;
    bool cba = (x == c && y == b && w == a);
    bool cab = (x == c && y == a && w == b);
    bool bca = (x == b && y == c && w == a);
    if (cba || cab || bca) {
      if (!cba) out.push_back(with_triple(v, p, c, b, a));
      if (!cab) out.push_back(with_triple(v, p, c, a, b));
      if (!bca) out.push_back(with_triple(v, p, b, c, a));
    }
  }
  return out;
}

template <typename MoveFn>
std::vector<AffinePermutation> closure_of_inverses(const AffinePermutation& start, MoveFn&& moves) {
  std::set<std::vector<i64>> seen{start.window()};
  std::deque<AffinePermutation> queue{start};
  std::vector<AffinePermutation> out;
  while (!queue.empty()) {
    AffinePermutation v = queue.front();
    queue.pop_front();
    out.push_back(inverse(v));
    for (auto& w : moves(v))
      if (seen.insert(w.window()).second) queue.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All atoms of z: the closure of alpha_min under the directed moves applied
// to inverse windows.
inline std::vector<AffinePermutation> atoms(const AffineInvolution& z) {
  return detail::closure_of_inverses(inverse(alpha_min(z)),
                                     [](const AffinePermutation& v) { return detail::directed_moves(v); });
}

// The larger Hecke-atom set: closure under the undirected triple rotations.
inline std::vector<AffinePermutation> hecke_atoms(const AffineInvolution& z) {
  return detail::closure_of_inverses(inverse(alpha_min(z)),
                                     [](const AffinePermutation& v) { return detail::undirected_moves(v); });
}

// Pattern criterion for pi in A(y), quantified over translated cycle pairs.
inline bool local_criterion(const AffinePermutation& pi, const AffineInvolution& y, i64 extra = 0) {
  require_same_n(pi, y.perm());
  if (length(pi) != hat_length(y)) return false;
  i64 n = pi.n();
  // Translate range: a nesting pair keeps both cycles within one another, so
  // |kn| is at most a cycle width plus n; a crossing violation pi(a) >= pi(b')
  // forces kn <= pi(a) - pi(d) <= n + disp(y) + 2*disp(pi). Both are covered.
  i64 K = ceil_div(2 * (max_displacement(pi) + max_displacement(y.perm())), n) + 2 + extra;
  auto cyc = cycle_set(y);
  for (auto [a, b] : cyc)
    if (a < b && pi(b) >= pi(a)) return false;
  for (auto [a, b] : cyc) {
    for (auto [c, d] : cyc) {
      for (i64 k = -K; k <= K; ++k) {
        i64 ap = c + k * n, bp = d + k * n;
        if (ap == a && bp == b) continue;
        if (a < ap && bp < b) {  // ap <= bp always
          if (pi(b) < pi(ap) && pi(ap) < pi(a)) return false;
          if (pi(b) < pi(bp) && pi(bp) < pi(a)) return false;
        }
        if (a < ap && b < bp && pi(a) >= pi(bp)) return false;
      }
    }
  }
  return true;
}

// z with one visible descent peeled: z*s_i when s_i and z commute, otherwise
// s_i*z*s_i.
inline AffineInvolution z_down(const AffineInvolution& z, i64 i) {
  AffinePermutation s = AffinePermutation::s(z.n(), i);
  AffinePermutation zs = multiply(z.perm(), s);
  AffinePermutation sz = multiply(s, z.perm());
  return AffineInvolution::make(zs == sz ? zs : multiply(s, zs));
}

inline MonomialExpansion involution_stanley(const AffineInvolution& z) {
  MonomialExpansion out(hat_length(z));
  for (const auto& p : atoms(z)) out = add(out, stanley(p));
  return out;
}

inline Coeff involution_word_count(const AffineInvolution& z) {
  Coeff total = 0;
  for (const auto& p : atoms(z)) total += reduced_word_count(p);
  return total;
}

inline std::string cycles_to_string(const AffineInvolution& z) {
  auto tc = two_cycles(z);
  if (tc.empty()) return "id";
  std::ostringstream os;
  for (size_t i = 0; i < tc.size(); ++i) {
    if (i) os << ' ';
    os << "t(" << tc[i].first << ',' << tc[i].second << ')';
  }
  return os.str();
}

}  // namespace affinv
