#pragma once
// Exhaustive enumeration utilities for tests and verification runs: length
// balls in the affine symmetric group, involution pools, and a Bruhat-order
// oracle built from cover edges.

#include <map>
#include <set>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/involution.hpp"

namespace affinv {

// All affine permutations of rank n with length <= max_length.
inline std::vector<AffinePermutation> length_ball(i64 n, i64 max_length) {
  std::vector<AffinePermutation> out{AffinePermutation::identity(n)};
  std::set<std::vector<i64>> seen{out[0].window()};
  std::vector<AffinePermutation> frontier = out;
  for (i64 l = 1; l <= max_length; ++l) {
    std::vector<AffinePermutation> next;
    for (const auto& p : frontier) {
      for (i64 i = 1; i <= n; ++i) {
        AffinePermutation q = multiply(p, AffinePermutation::s(n, i));
        if (length(q) == l && seen.insert(q.window()).second) next.push_back(std::move(q));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// All affine involutions of rank n with hat-length <= max_hat. Every such
// involution is pi^{-1} o pi for some pi of length <= max_hat (its atoms).
inline std::vector<AffineInvolution> involution_ball(i64 n, i64 max_hat) {
  std::set<std::vector<i64>> seen;
  std::vector<AffineInvolution> out;
  for (const auto& p : length_ball(n, max_hat)) {
    AffinePermutation z = hecke_product(inverse(p), p);
    if (seen.insert(z.window()).second) {
      AffineInvolution zi = AffineInvolution::make(z);
      if (hat_length(zi) <= max_hat) out.push_back(std::move(zi));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bruhat order restricted to a length ball, with reachability computed from
// cover edges. Valid for queries whose interval lies inside the ball.
class BruhatPoset {
 public:
  BruhatPoset(i64 n, i64 max_length) : max_length_(max_length) {
    elements_ = length_ball(n, max_length);
    std::sort(elements_.begin(), elements_.end(),
              [](const AffinePermutation& a, const AffinePermutation& b) {
                i64 la = length(a), lb = length(b);
                if (la != lb) return la < lb;
                return a.window() < b.window();
              });
    for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].window()] = i;
    size_t words = (elements_.size() + 63) / 64;
    down_.assign(elements_.size(), std::vector<std::uint64_t>(words, 0));
    for (size_t i = 0; i < elements_.size(); ++i) {
      set_bit(down_[i], i);
      if (length(elements_[i]) == 0) continue;
      for (const auto& c : co_covers(elements_[i])) {
        auto it = index_.find(c.window());
        assert(it != index_.end());  // co-covers stay inside the ball
        or_into(down_[i], down_[it->second]);
      }
    }
  }

  i64 max_length() const { return max_length_; }
  const std::vector<AffinePermutation>& elements() const { return elements_; }

  bool contains(const AffinePermutation& p) const { return index_.count(p.window()) != 0; }

  bool leq(const AffinePermutation& a, const AffinePermutation& b) const {
    auto ia = index_.find(a.window()), ib = index_.find(b.window());
    if (ia == index_.end() || ib == index_.end())
      throw Error("poset query outside the enumerated ball");
    return test_bit(down_[ib->second], ia->second);
  }

 private:
  static void set_bit(std::vector<std::uint64_t>& v, size_t i) { v[i / 64] |= 1ull << (i % 64); }
  static bool test_bit(const std::vector<std::uint64_t>& v, size_t i) {
    return (v[i / 64] >> (i % 64)) & 1ull;
  }
  static void or_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
  }

  i64 max_length_;
  std::vector<AffinePermutation> elements_;
  std::map<std::vector<i64>, size_t> index_;
  std::vector<std::vector<std::uint64_t>> down_;
};

}  // namespace affinv
