#pragma once
// Shapes of affine permutations, Grassmannian representatives, affine Schur
// functions, monomial-to-Schur conversion, and the omega_plus involution.

#include <vector>

#include "affinv/core.hpp"
#include "affinv/expansion.hpp"
#include "affinv/stanley.hpp"

namespace affinv {

// A monomial expansion is not in the span of the affine Schur functions F_lambda
// with lambda_1 < n.
struct NotInSpan : Error { using Error::Error; };

inline void require_par_n(const Partition& lambda, i64 n) {
  if (lambda.part(1) >= n)
    throw NotInParN("partition must have all parts < n");
}

// Shape lambda(pi): transpose of the decreasing sort of the code of pi^{-1}.
inline Partition shape(const AffinePermutation& p) {
  return Partition::sorted_from(code(inverse(p))).transpose();
}

// Grassmannian means the only possible left descent is s_n; equivalently the
// code of pi^{-1} is weakly increasing.
inline bool is_grassmannian(const AffinePermutation& p) {
  std::set<i64> des = descents_left(p);
  des.erase(p.n());
  return des.empty();
}

// The unique Grassmannian element of shape lambda: its inverse has the weakly
// increasing code obtained by padding transpose(lambda) with zeros.
inline AffinePermutation grassmannian_of_shape(const Partition& lambda, i64 n) {
  require_par_n(lambda, n);
  std::vector<i64> c(static_cast<size_t>(n), 0);
  const std::vector<i64> t = lambda.transpose().parts();
  for (size_t i = 0; i < t.size(); ++i)
    c[static_cast<size_t>(n) - t.size() + i] = t[t.size() - 1 - i];
  return inverse(from_code(n, std::move(c)));
}

inline MonomialExpansion affine_schur(const Partition& lambda, i64 n) {
  return stanley(grassmannian_of_shape(lambda, n));
}

// The shape of the star conjugate; pairs with omega_plus on the F-basis.
inline Partition lambda_star(const Partition& lambda, i64 n) {
  require_par_n(lambda, n);
  return shape(star(grassmannian_of_shape(lambda, n)));
}

// lambda'(pi) := lambda(pi^{-1})^* .
inline Partition lambda_prime(const AffinePermutation& p) {
  return lambda_star(shape(inverse(p)), p.n());
}

// Expand a monomial expansion in the affine Schur basis by eliminating
// dominance-maximal terms; throws NotInSpan when a leading term has a part
// >= n. Triangularity F_lambda = m_lambda + (dominance-lower terms) makes the
// loop strictly decrease the leading term set, independent of tie-breaking.
inline SchurExpansion to_affine_schur(const MonomialExpansion& f, i64 n) {
  SchurExpansion out(f.degree());
  MonomialExpansion rest = f;
  while (!rest.is_zero()) {
    // The lex-largest term is dominance-maximal (dominance refines lex).
    // Copy both: rest is reassigned below while these are still in scope.
    const Partition lambda = rest.terms().rbegin()->first;
    const Coeff c = rest.terms().rbegin()->second;
    if (lambda.part(1) >= n)
      throw NotInSpan("leading term has a part >= n");
    out.add_term(lambda, c);
    rest = add(rest, scale(affine_schur(lambda, n), -c));
  }
  return out;
}

// omega_plus acts on the affine Schur basis by F_lambda -> F_{lambda^*}.
inline SchurExpansion omega_plus(const SchurExpansion& f, i64 n) {
  SchurExpansion out(f.degree());
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda_star(lambda, n), c);
  return out;
}

}  // namespace affinv
