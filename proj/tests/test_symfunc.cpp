// Partitions, dominance, expansions with exact coefficients, and the affine
// Schur basis change.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "affinv/core.hpp"
#include "affinv/enumerate.hpp"
#include "affinv/expansion.hpp"
#include "affinv/partition.hpp"
#include "affinv/schur.hpp"
#include "affinv/stanley.hpp"

using namespace affinv;
using AP = AffinePermutation;

TEST_CASE("partition construction and accessors") {
  Partition p = Partition::make({3, 1, 1});
  REQUIRE(p.weight() == 5);
  REQUIRE(p.num_parts() == 3);
  REQUIRE(p.part(1) == 3);
  REQUIRE(p.part(2) == 1);
  REQUIRE(p.part(7) == 0);  // implicit zero padding
  REQUIRE(p.to_string() == "[3,1,1]");
  REQUIRE(p.exponent_string() == "31^2");
  REQUIRE(Partition::make({}).empty());
  REQUIRE(Partition::make({}).exponent_string() == "0");
  REQUIRE(Partition::make({2, 2, 0, 0}) == Partition::make({2, 2}));  // zeros trimmed
  REQUIRE_THROWS_AS(Partition::make({1, 2}), Error);
  REQUIRE_THROWS_AS(Partition::make({2, -1}), Error);
  REQUIRE(Partition::sorted_from({1, 3, 0, 1}) == Partition::make({3, 1, 1}));
}

TEST_CASE("transpose is an involution") {
  REQUIRE(Partition::make({3, 1}).transpose() == Partition::make({2, 1, 1}));
  REQUIRE(Partition::make({}).transpose() == Partition::make({}));
  for (const auto& p : partitions_of(6, 6)) {
    REQUIRE(p.transpose().transpose() == p);
    REQUIRE(p.transpose().weight() == p.weight());
  }
}

TEST_CASE("partition enumeration") {
  REQUIRE(partitions_of(4, 3).size() == 4);  // 31, 22, 211, 1111
  REQUIRE(partitions_of(5, 5).size() == 7);
  REQUIRE(partitions_of(0, 3).size() == 1);  // the empty partition
  REQUIRE(partitions_of(3, 1).size() == 1);  // 111
  for (const auto& p : partitions_of(6, 4)) {
    REQUIRE(p.weight() == 6);
    REQUIRE(p.part(1) <= 4);
  }
}

TEST_CASE("dominance order") {
  REQUIRE(dominance_less(Partition::make({2, 2}), Partition::make({3, 1})));
  REQUIRE(!dominance_less(Partition::make({3, 1}), Partition::make({2, 2})));
  // Incomparable pair of weight 6.
  REQUIRE(!dominance_less(Partition::make({3, 1, 1, 1}), Partition::make({2, 2, 2})));
  REQUIRE(!dominance_less(Partition::make({2, 2, 2}), Partition::make({3, 1, 1, 1})));
  REQUIRE(dominance_leq(Partition::make({2, 2}), Partition::make({2, 2})));
  REQUIRE_THROWS_AS(dominance_less(Partition::make({2}), Partition::make({1})), WeightMismatch);

  // Dominance is refined by lexicographic order.
  for (const auto& a : partitions_of(6, 6))
    for (const auto& b : partitions_of(6, 6))
      if (dominance_less(a, b)) REQUIRE(a < b);

  // Transposition reverses dominance.
  for (const auto& a : partitions_of(5, 5))
    for (const auto& b : partitions_of(5, 5))
      if (dominance_less(a, b)) REQUIRE(dominance_less(b.transpose(), a.transpose()));
}

TEST_CASE("expansions carry exact integer coefficients") {
  MonomialExpansion f(4);
  f.add_term(Partition::make({2, 1, 1}), 1);
  f.add_term(Partition::make({1, 1, 1, 1}), 2);
  REQUIRE(f.to_string() == "2m[1,1,1,1] + m[2,1,1]");
  REQUIRE(f.coeff(Partition::make({2, 1, 1})) == 1);
  REQUIRE(f.coeff(Partition::make({2, 2})) == 0);

  f.add_term(Partition::make({2, 1, 1}), -1);  // cancels to zero and is erased
  REQUIRE(f.terms().size() == 1);
  REQUIRE_THROWS_AS(f.add_term(Partition::make({3}), 1), DegreeMismatch);

  MonomialExpansion g(4);
  REQUIRE(g.is_zero());
  REQUIRE(g.to_string() == "0");
  REQUIRE_THROWS_AS(add(f, MonomialExpansion(5)), DegreeMismatch);

  MonomialExpansion h = add(scale(f, 3), f);
  REQUIRE(h.coeff(Partition::make({1, 1, 1, 1})) == 8);

  MonomialExpansion c(0);
  c.add_term(Partition::make({}), 3);
  REQUIRE(c.to_string() == "3");

  // Coefficients are arbitrary-precision integers.
  MonomialExpansion big(1);
  big.add_term(Partition::make({1}), Coeff("123456789012345678901234567890"));
  REQUIRE(scale(big, 2).coeff(Partition::make({1})) ==
          Coeff("246913578024691357802469135780"));
}

TEST_CASE("shapes of affine permutations") {
  REQUIRE(shape(AP::make(4, {-3, 4, 3, 6})) == Partition::make({2, 1, 1, 1}));
  REQUIRE(shape(AP::make(4, {5, 0, 3, 2})) == Partition::make({3, 2}));
  REQUIRE(shape(AP::identity(4)).empty());
  for (const auto& q : length_ball(4, 5)) REQUIRE(shape(q).weight() == length(q));
}

TEST_CASE("one Grassmannian element per shape") {
  REQUIRE(grassmannian_of_shape(Partition::make({3, 1}), 4) == AP::make(4, {5, 0, 2, 3}));
  REQUIRE(is_grassmannian(AP::make(4, {5, 0, 2, 3})));
  REQUIRE_THROWS_AS(grassmannian_of_shape(Partition::make({4}), 4), NotInParN);

  for (i64 n : {3, 4}) {
    for (i64 w = 0; w <= 5; ++w) {
      for (const auto& lambda : partitions_of(w, n - 1)) {
        AP g = grassmannian_of_shape(lambda, n);
        REQUIRE(is_grassmannian(g));
        REQUIRE(shape(g) == lambda);
        REQUIRE(length(g) == w);
      }
    }
  }

  // Grassmannian elements in a ball are exactly those hit by some shape.
  std::set<std::vector<i64>> hit;
  for (i64 w = 0; w <= 4; ++w)
    for (const auto& lambda : partitions_of(w, 3))
      hit.insert(grassmannian_of_shape(lambda, 4).window());
  for (const auto& q : length_ball(4, 4))
    REQUIRE(is_grassmannian(q) == (hit.count(q.window()) != 0));
}

TEST_CASE("conjugate shape involution") {
  REQUIRE(lambda_star(Partition::make({3, 1}), 4) == Partition::make({1, 1, 1, 1}));
  for (i64 n : {3, 4, 5}) {
    for (i64 w = 0; w <= 5; ++w) {
      for (const auto& lambda : partitions_of(w, n - 1)) {
        Partition ls = lambda_star(lambda, n);
        REQUIRE(ls.weight() == w);
        REQUIRE(ls.part(1) <= n - 1);
        REQUIRE(lambda_star(ls, n) == lambda);
      }
    }
  }
}

TEST_CASE("affine Schur expansion is unitriangular and round-trips") {
  for (i64 w = 0; w <= 5; ++w) {
    for (const auto& lambda : partitions_of(w, 3)) {
      MonomialExpansion f = affine_schur(lambda, 4);
      REQUIRE(f.coeff(lambda) == 1);
      for (const auto& [mu, c] : f.terms()) {
        if (mu == lambda) continue;
        REQUIRE(dominance_less(mu, lambda));
        REQUIRE(c > 0);
      }
      SchurExpansion back = to_affine_schur(f, 4);
      REQUIRE(back.terms().size() == 1);
      REQUIRE(back.coeff(lambda) == 1);
    }
  }
}

TEST_CASE("basis change inverts arbitrary integer combinations") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    i64 n = 3 + static_cast<i64>(rng() % 2);
    i64 w = 2 + static_cast<i64>(rng() % 4);
    auto shapes = partitions_of(w, n - 1);
    if (shapes.empty()) continue;
    SchurExpansion want(w);
    MonomialExpansion mono(w);
    for (int pick = 0; pick < 3; ++pick) {
      const Partition& lambda = shapes[rng() % shapes.size()];
      i64 c = static_cast<i64>(rng() % 7) - 3;  // negatives exercise elimination
      want.add_term(lambda, c);
      mono = add(mono, scale(affine_schur(lambda, n), c));
    }
    REQUIRE(to_affine_schur(mono, n) == want);
  }
}

TEST_CASE("expansions outside the span are rejected") {
  MonomialExpansion f(1);
  f.add_term(Partition::make({1}), 1);
  MonomialExpansion g = scale(f, 2);  // 2m[1] is not an integer F-combination? it is: 2F[1]
  REQUIRE(to_affine_schur(g, 3).coeff(Partition::make({1})) == 2);

  // A partition with a part >= n cannot appear.
  MonomialExpansion bad(4);
  bad.add_term(Partition::make({4}), 1);
  REQUIRE_THROWS_AS(to_affine_schur(bad, 4), NotInSpan);
}

TEST_CASE("omega relabels affine Schur functions by the conjugate shape") {
  for (i64 w = 0; w <= 5; ++w) {
    for (const auto& lambda : partitions_of(w, 3)) {
      SchurExpansion f(w);
      f.add_term(lambda, 1);
      SchurExpansion g = omega_plus(f, 4);
      REQUIRE(g.terms().size() == 1);
      REQUIRE(g.coeff(lambda_star(lambda, 4)) == 1);
      REQUIRE(omega_plus(g, 4) == f);
    }
  }

  // On monomial expansions of Grassmannian elements, omega matches the star map.
  for (i64 w = 0; w <= 4; ++w) {
    for (const auto& lambda : partitions_of(w, 3)) {
      AP g = grassmannian_of_shape(lambda, 4);
      SchurExpansion fg = to_affine_schur(stanley(g), 4);
      SchurExpansion fs = to_affine_schur(stanley(star(g)), 4);
      REQUIRE(omega_plus(fg, 4) == fs);
    }
  }
}

TEST_CASE("derived shape of the inverse") {
  // lambda' composes the inverse shape with the conjugate-shape involution.
  for (const auto& q : length_ball(4, 4))
    REQUIRE(lambda_prime(q) == lambda_star(shape(inverse(q)), 4));
}
