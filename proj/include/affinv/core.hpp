#pragma once
// Affine permutations: bijections pi of Z with pi(i+n) = pi(i)+n and
// sum_{i=1}^n pi(i) = n(n+1)/2, stored by their window [pi(1),...,pi(n)].
// Supplies the Coxeter-theoretic toolkit: length, inversion codes, descents,
// Bruhat covers, 0-Hecke products, reduced words, and the cyclically
// decreasing elements used by Stanley-function expansions.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affinv {

using i64 = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Window contains two entries with the same residue mod n.
struct DuplicateResidue : Error { using Error::Error; };
// Window entries do not sum to n(n+1)/2.
struct BadSum : Error { using Error::Error; };
// Two operands live in affine symmetric groups of different rank.
struct PeriodMismatch : Error { using Error::Error; };
// A would-be code has no zero entry (codes are N^n minus positive vectors).
struct AllPositive : Error { using Error::Error; };
// Reflection t_{ab} requires a and b in distinct residue classes.
struct SameResidue : Error { using Error::Error; };
// Cyclically decreasing elements come from proper subsets of Z/n.
struct FullSubset : Error { using Error::Error; };
// A partition argument must have all parts < n.
struct NotInParN : Error { using Error::Error; };

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline i64 floor_mod(i64 a, i64 b) { return a - b * floor_div(a, b); }
inline i64 ceil_div(i64 a, i64 b) { return floor_div(a + b - 1, b); }

class AffinePermutation {
 public:
  static AffinePermutation make(i64 n, std::vector<i64> window) {
    if (n < 1 || static_cast<i64>(window.size()) != n)
      throw Error("window size must equal the rank n >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (i64 v : window) {
      i64 r = floor_mod(v - 1, n);
      if (seen[static_cast<size_t>(r)])
        throw DuplicateResidue("two window entries share a residue mod n");
      seen[static_cast<size_t>(r)] = 1;
    }
    i64 sum = std::accumulate(window.begin(), window.end(), i64{0});
    if (sum != n * (n + 1) / 2)
      throw BadSum("window entries must sum to n(n+1)/2");
    return AffinePermutation(n, std::move(window));
  }

  static AffinePermutation identity(i64 n) {
    std::vector<i64> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), i64{1});
    return AffinePermutation(n, std::move(w));
  }

  // Simple generator s_i (index taken mod n): swaps i <-> i+1 and all translates.
  static AffinePermutation s(i64 n, i64 i) {
    AffinePermutation p = identity(n);
    i64 a = floor_mod(i - 1, n) + 1;  // representative in [1,n]
    p.set_value(a, a + 1);
    p.set_value(a + 1, a);
    return p;
  }

  // Reflection t_{ab}: swaps a <-> b and all translates a+kn <-> b+kn.
  static AffinePermutation transposition(i64 n, i64 a, i64 b) {
    if (floor_mod(a - b, n) == 0)
      throw SameResidue("t_{ab} needs a,b in distinct residue classes");
    AffinePermutation p = identity(n);
    p.set_value(a, b);
    p.set_value(b, a);
    return p;
  }

  i64 n() const { return n_; }
  const std::vector<i64>& window() const { return win_; }

  i64 operator()(i64 i) const {
    i64 k = floor_mod(i - 1, n_);
    return win_[static_cast<size_t>(k)] + (i - 1 - k);
  }

  friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
    return a.n_ == b.n_ && a.win_ == b.win_;
  }
  friend bool operator!=(const AffinePermutation& a, const AffinePermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.win_ < b.win_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (i64 k = 0; k < n_; ++k) {
      if (k) os << ',';
      os << win_[static_cast<size_t>(k)];
    }
    os << ']';
    return os.str();
  }

 private:
  AffinePermutation(i64 n, std::vector<i64> w) : n_(n), win_(std::move(w)) {}

  // Impose pi(p) = v (and all translates); used only while building windows
  // whose validity the named constructors re-establish.
  void set_value(i64 p, i64 v) {
    i64 k = floor_mod(p - 1, n_);
    win_[static_cast<size_t>(k)] = v - (p - 1 - k);
  }

  i64 n_;
  std::vector<i64> win_;

  friend AffinePermutation window_with(const AffinePermutation&, i64, i64);
};

// Copy of p with p(pos) := value (translates follow); callers must restore a
// genuine bijection before the result escapes unchecked contexts.
inline AffinePermutation window_with(const AffinePermutation& p, i64 pos, i64 value) {
  AffinePermutation q = p;
  q.set_value(pos, value);
  return q;
}

inline void require_same_n(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.n() != b.n()) throw PeriodMismatch("operands have different ranks");
}

inline AffinePermutation multiply(const AffinePermutation& a, const AffinePermutation& b) {
  require_same_n(a, b);
  std::vector<i64> w(static_cast<size_t>(a.n()));
  for (i64 i = 1; i <= a.n(); ++i) w[static_cast<size_t>(i - 1)] = a(b(i));
  return AffinePermutation::make(a.n(), std::move(w));
}

inline AffinePermutation inverse(const AffinePermutation& p) {
  i64 n = p.n();
  std::vector<i64> w(static_cast<size_t>(n));
  for (i64 k = 0; k < n; ++k) {
    i64 v = p.window()[static_cast<size_t>(k)];
    i64 r = floor_mod(v - 1, n);           // v sits in residue class r+1
    w[static_cast<size_t>(r)] = (k + 1) - (v - 1 - r);
  }
  return AffinePermutation::make(n, std::move(w));
}

// Inversions of the pair of residue classes (k,l): counts j > i with
// pi(i) > pi(j) where i = k+1 (mod-n class), j in class l+1.
inline i64 pair_inversions(const AffinePermutation& p, i64 k, i64 l) {
  i64 n = p.n();
  i64 d = p.window()[static_cast<size_t>(k)] - p.window()[static_cast<size_t>(l)];
  i64 m0 = (l > k) ? 0 : 1;  // smallest positive shift making position l+1 exceed k+1
  return std::max<i64>(0, ceil_div(d, n) - m0);
}

inline i64 length(const AffinePermutation& p) {
  i64 n = p.n(), total = 0;
  for (i64 k = 0; k < n; ++k)
    for (i64 l = 0; l < n; ++l)
      if (l != k) total += pair_inversions(p, k, l);
  return total;
}

// Inversion code c(pi): c_i = #{j > i : pi(i) > pi(j)} for i in [1,n].
inline std::vector<i64> code(const AffinePermutation& p) {
  i64 n = p.n();
  std::vector<i64> c(static_cast<size_t>(n), 0);
  for (i64 k = 0; k < n; ++k)
    for (i64 l = 0; l < n; ++l)
      if (l != k) c[static_cast<size_t>(k)] += pair_inversions(p, k, l);
  return c;
}

// Inverse of the code bijection S~_n -> N^n minus (Z>0)^n.
inline AffinePermutation from_code(i64 n, std::vector<i64> d) {
  if (static_cast<i64>(d.size()) != n) throw Error("code length must equal n");
  bool has_zero = false;
  for (i64 v : d) {
    if (v < 0) throw Error("code entries must be nonnegative");
    if (v == 0) has_zero = true;
  }
  if (!has_zero) throw AllPositive("a code must have at least one zero entry");
  // Peel cyclic descents: if i is a cyclic strict descent of d, then d is the
  // code of some pi with right descent i, and pi*s_i has the swapped-and-
  // decremented code. Letters are collected outermost-first.
  std::vector<i64> letters;
  auto is_zero = [&] { return std::all_of(d.begin(), d.end(), [](i64 v) { return v == 0; }); };
  while (!is_zero()) {
    i64 found = -1;
    for (i64 i = 1; i <= n; ++i) {
      i64 a = d[static_cast<size_t>(i - 1)];
      i64 b = d[static_cast<size_t>(i % n)];
      if (a > b) { found = i; break; }
    }
    if (found < 0) throw Error("nonzero code without a cyclic descent");
    i64 a = d[static_cast<size_t>(found - 1)];
    i64 b = d[static_cast<size_t>(found % n)];
    d[static_cast<size_t>(found - 1)] = b;
    d[static_cast<size_t>(found % n)] = a - 1;
    letters.push_back(found);
  }
  AffinePermutation p = AffinePermutation::identity(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    p = multiply(p, AffinePermutation::s(n, *it));
  return p;
}

inline std::set<i64> descents_right(const AffinePermutation& p) {
  std::set<i64> out;
  for (i64 i = 1; i <= p.n(); ++i)
    if (p(i) > p(i + 1)) out.insert(i);
  return out;
}

inline std::set<i64> descents_left(const AffinePermutation& p) {
  return descents_right(inverse(p));
}

// 0-Hecke product: fold a reduced word of b onto a, absorbing letters that
// would decrease length.
inline AffinePermutation hecke_product(const AffinePermutation& a, const AffinePermutation& b);

inline std::vector<i64> reduced_word(const AffinePermutation& p) {
  // Peels the smallest right descent; returns letters in product order.
  std::vector<i64> rev;
  AffinePermutation q = p;
  for (;;) {
    std::set<i64> des = descents_right(q);
    if (des.empty()) break;
    i64 i = *des.begin();
    q = multiply(q, AffinePermutation::s(q.n(), i));
    rev.push_back(i);
  }
  assert(q == AffinePermutation::identity(p.n()));
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline AffinePermutation hecke_product(const AffinePermutation& a, const AffinePermutation& b) {
  require_same_n(a, b);
  AffinePermutation out = a;
  i64 len = length(out);
  for (i64 i : reduced_word(b)) {
    AffinePermutation cand = multiply(out, AffinePermutation::s(out.n(), i));
    i64 cl = length(cand);
    if (cl > len) { out = std::move(cand); len = cl; }
  }
  return out;
}

inline void all_reduced_words_rec(const AffinePermutation& p, std::vector<i64>& suffix,
                                  std::vector<std::vector<i64>>& out) {
  std::set<i64> des = descents_right(p);
  if (des.empty()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (i64 i : des) {
    suffix.push_back(i);
    AffinePermutation q = multiply(p, AffinePermutation::s(p.n(), i));
    all_reduced_words_rec(q, suffix, out);
    suffix.pop_back();
  }
}

inline std::vector<std::vector<i64>> reduced_words(const AffinePermutation& p) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> suffix;
  all_reduced_words_rec(p, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Bruhat cover test: pi <. pi * t_{ab}. Multiplying by a reflection moves up
// in Bruhat order exactly when the length grows, and the order is graded by
// length, so a gap of one is a cover. The classical no-intermediate-value
// test is only valid when b - a < n (wider pairs overlap their own
// translates), so we compare lengths directly.
inline bool bruhat_cover(const AffinePermutation& p, i64 a, i64 b) {
  if (a > b) std::swap(a, b);
  if (floor_mod(a - b, p.n()) == 0)
    throw SameResidue("cover test needs positions in distinct residue classes");
  if (p(a) >= p(b)) return false;
  return length(multiply(p, AffinePermutation::transposition(p.n(), a, b))) == length(p) + 1;
}

inline i64 max_displacement(const AffinePermutation& p) {
  i64 m = 0;
  for (i64 k = 0; k < p.n(); ++k)
    m = std::max<i64>(m, std::abs(p.window()[static_cast<size_t>(k)] - (k + 1)));
  return m;
}

// All co-covers rho t_{ab} <. rho, searching b in (a, a+span]. The default
// span is sufficient: every integer x has |p(x) - x| <= max_displacement(p)
// by periodicity, so a descent pair a < b with p(a) > p(b) satisfies
// b - a < (p(a) - a) - (p(b) - b) <= 2 * max_displacement(p).
inline std::vector<AffinePermutation> co_covers(const AffinePermutation& p, i64 extra_span = 0) {
  i64 n = p.n();
  i64 span = 2 * max_displacement(p) + n + extra_span;
  std::vector<AffinePermutation> out;
  for (i64 a = 1; a <= n; ++a) {
    for (i64 b = a + 1; b <= a + span; ++b) {
      if (floor_mod(a - b, n) == 0) continue;
      if (p(a) <= p(b)) continue;
      AffinePermutation rho = multiply(p, AffinePermutation::transposition(n, a, b));
      if (length(rho) == length(p) - 1) out.push_back(std::move(rho));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
#ifndef NDEBUG
  if (extra_span == 0) {
    auto widened = co_covers(p, n);
    assert(widened == out && "co-cover search span too small");
  }
#endif
  return out;
}

// Bruhat order test by breadth-first descent from the longer element.
inline bool bruhat_leq(const AffinePermutation& a, const AffinePermutation& b) {
  require_same_n(a, b);
  i64 la = length(a), lb = length(b);
  if (la > lb) return false;
  if (la == lb) return a == b;
  std::set<std::vector<i64>> seen;
  std::vector<AffinePermutation> frontier{b};
  seen.insert(b.window());
  for (i64 step = lb; step > la; --step) {
    std::vector<AffinePermutation> next;
    for (const auto& q : frontier) {
      for (auto& c : co_covers(q)) {
        if (c == a) return true;
        if (step - 1 > la && seen.insert(c.window()).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  return false;
}

// Conjugation by i -> n+1-i; sends s_i to s_{n-i}.
inline AffinePermutation star(const AffinePermutation& p) {
  i64 n = p.n();
  std::vector<i64> w(static_cast<size_t>(n));
  for (i64 k = 1; k <= n; ++k) w[static_cast<size_t>(k - 1)] = n + 1 - p(n + 1 - k);
  return AffinePermutation::make(n, std::move(w));
}

// Conjugation by i -> i+1; sends s_i to s_{i+1}.
inline AffinePermutation rotate(const AffinePermutation& p) {
  i64 n = p.n();
  std::vector<i64> w(static_cast<size_t>(n));
  for (i64 k = 1; k <= n; ++k) w[static_cast<size_t>(k - 1)] = p(k - 1) + 1;
  return AffinePermutation::make(n, std::move(w));
}

// The cyclically decreasing element attached to a proper subset S of the
// generator indices [1,n]: split S into maximal cyclic runs a,a+1,...,b and
// multiply s_b s_{b-1} ... s_a per run (runs commute).
inline AffinePermutation cyclically_decreasing_from_subset(i64 n, const std::set<i64>& subset) {
  if (static_cast<i64>(subset.size()) >= n)
    throw FullSubset("cyclically decreasing elements need a proper subset of Z/n");
  for (i64 i : subset)
    if (i < 1 || i > n) throw Error("generator indices must lie in [1,n]");
  AffinePermutation out = AffinePermutation::identity(n);
  auto contains = [&](i64 i) { return subset.count(floor_mod(i - 1, n) + 1) != 0; };
  for (i64 start : subset) {
    if (contains(start - 1)) continue;  // not the head of its run
    i64 end = start;
    while (contains(end + 1)) ++end;
    for (i64 i = end; i >= start; --i)
      out = multiply(out, AffinePermutation::s(n, i));
  }
  return out;
}

inline std::vector<std::set<i64>> subsets_of_size(i64 n, i64 k) {
  std::vector<std::set<i64>> out;
  std::vector<i64> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), i64{1});
  if (k > n) return out;
  for (;;) {
    out.emplace_back(idx.begin(), idx.end());
    i64 t = k - 1;
    while (t >= 0 && idx[static_cast<size_t>(t)] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++idx[static_cast<size_t>(t)];
    for (i64 u = t + 1; u < k; ++u) idx[static_cast<size_t>(u)] = idx[static_cast<size_t>(u - 1)] + 1;
  }
  return out;
}

inline bool is_cyclically_decreasing(const AffinePermutation& p) {
  i64 k = length(p);
  if (k >= p.n()) return false;
  for (const auto& s : subsets_of_size(p.n(), k))
    if (cyclically_decreasing_from_subset(p.n(), s) == p) return true;
  return false;
}

}  // namespace affinv
