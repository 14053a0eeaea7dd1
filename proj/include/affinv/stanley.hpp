#pragma once
// Affine Stanley symmetric functions: F_pi expanded in the monomial basis by
// counting length-additive factorizations of pi into cyclically decreasing
// factors of prescribed lengths.

#include <map>
#include <utility>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/expansion.hpp"

namespace affinv {

namespace detail {

struct FactorizationMemo {
  // key: (window of the remaining element, remaining factor lengths)
  std::map<std::pair<std::vector<i64>, std::vector<i64>>, Coeff> table;
};

inline Coeff count_factorizations(const AffinePermutation& p, const std::vector<i64>& parts,
                                  size_t idx, FactorizationMemo& memo) {
  i64 lp = length(p);
  if (idx == parts.size()) return lp == 0 ? 1 : 0;
  std::vector<i64> rest(parts.begin() + static_cast<std::ptrdiff_t>(idx), parts.end());
  auto key = std::make_pair(p.window(), rest);
  auto it = memo.table.find(key);
  if (it != memo.table.end()) return it->second;
  Coeff total = 0;
  i64 k = parts[idx];
  for (const auto& sub : subsets_of_size(p.n(), k)) {
    AffinePermutation u = cyclically_decreasing_from_subset(p.n(), sub);
    AffinePermutation q = multiply(inverse(u), p);
    if (length(q) == lp - k) total += count_factorizations(q, parts, idx + 1, memo);
  }
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// Coefficient of m_lambda in F_pi: the number of factorizations
// pi = u_1 u_2 ... u_r with u_t cyclically decreasing, l(u_t) = lambda_t,
// and sum l(u_t) = l(pi).
inline Coeff stanley_coefficient(const AffinePermutation& p, const Partition& lambda) {
  if (lambda.weight() != length(p)) return 0;
  if (lambda.part(1) >= p.n()) return 0;  // factors are proper subsets of Z/n
  detail::FactorizationMemo memo;
  return detail::count_factorizations(p, lambda.parts(), 0, memo);
}

inline MonomialExpansion stanley(const AffinePermutation& p) {
  i64 deg = length(p);
  MonomialExpansion out(deg);
  detail::FactorizationMemo memo;
  for (const auto& lambda : partitions_of(deg, p.n() - 1)) {
    Coeff c = deg == 0 ? Coeff(1)
                       : detail::count_factorizations(p, lambda.parts(), 0, memo);
    out.add_term(lambda, c);
  }
  return out;
}

// Number of reduced words, via the descent recursion (equals the coefficient
// of m_{1^l} in F_pi; the equality is exercised in tests).
inline Coeff reduced_word_count(const AffinePermutation& p) {
  std::map<std::vector<i64>, Coeff> memo;
  auto rec = [&](auto&& self, const AffinePermutation& q) -> Coeff {
    std::set<i64> des = descents_right(q);
    if (des.empty()) return 1;
    auto it = memo.find(q.window());
    if (it != memo.end()) return it->second;
    Coeff total = 0;
    for (i64 i : des) total += self(self, multiply(q, AffinePermutation::s(q.n(), i)));
    memo.emplace(q.window(), total);
    return total;
  };
  return rec(rec, p);
}

}  // namespace affinv
