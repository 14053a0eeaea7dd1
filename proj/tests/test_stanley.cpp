// The symmetric generating function of an affine permutation: coefficients
// count length-additive factorizations into cyclically decreasing elements.
#include <catch2/catch_amalgamated.hpp>

#include "affinv/core.hpp"
#include "affinv/enumerate.hpp"
#include "affinv/schur.hpp"
#include "affinv/stanley.hpp"

using namespace affinv;
using AP = AffinePermutation;

namespace {

// Independent oracle: count factorizations with the parts consumed in a
// caller-chosen order by direct enumeration over cyclically decreasing
// left factors of the requested size.
i64 count_factorizations_in_order(const AP& p, const std::vector<i64>& parts, size_t idx = 0) {
  if (idx == parts.size()) return p == AP::identity(p.n()) ? 1 : 0;
  i64 k = parts[idx];
  i64 total = 0;
  for (const auto& sub : subsets_of_size(p.n(), k)) {
    AP u = cyclically_decreasing_from_subset(p.n(), sub);
    AP rest = multiply(inverse(u), p);
    if (length(rest) != length(p) - k) continue;
    total += count_factorizations_in_order(rest, parts, idx + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("monomial expansion of a length-four element") {
  AP g = AP::make(4, {0, 3, 6, 1});
  MonomialExpansion f = stanley(g);
  REQUIRE(f.coeff(Partition::make({1, 1, 1, 1})) == 2);
  REQUIRE(f.coeff(Partition::make({2, 1, 1})) == 1);
  REQUIRE(f.coeff(Partition::make({2, 2})) == 0);
  REQUIRE(f.coeff(Partition::make({3, 1})) == 0);
  REQUIRE(f.to_string() == "2m[1,1,1,1] + m[2,1,1]");
}

TEST_CASE("monomial expansions of an element and its inverse") {
  AP p = AP::make(4, {-3, 4, 3, 6});
  MonomialExpansion f = stanley(p);
  REQUIRE(f.coeff(Partition::make({2, 1, 1, 1})) == 1);
  REQUIRE(f.coeff(Partition::make({1, 1, 1, 1, 1})) == 4);
  REQUIRE(f.terms().size() == 2);

  MonomialExpansion fi = stanley(inverse(p));
  REQUIRE(fi.coeff(Partition::make({3, 2})) == 1);
  REQUIRE(fi.coeff(Partition::make({3, 1, 1})) == 2);
  REQUIRE(fi.coeff(Partition::make({2, 2, 1})) == 2);
  REQUIRE(fi.coeff(Partition::make({2, 1, 1, 1})) == 3);
  REQUIRE(fi.coeff(Partition::make({1, 1, 1, 1, 1})) == 4);
  REQUIRE(fi.terms().size() == 5);
}

TEST_CASE("edge cases of the expansion") {
  REQUIRE(stanley(AP::identity(4)).to_string() == "1");
  REQUIRE(stanley(AP::s(4, 2)).to_string() == "m[1]");
  REQUIRE(stanley(AP::s(4, 4)).to_string() == "m[1]");

  // Parts of size >= n never contribute.
  AP g = AP::make(4, {0, 3, 6, 1});
  REQUIRE(stanley_coefficient(g, Partition::make({4})) == 0);
  REQUIRE(stanley_coefficient(g, Partition::make({2, 1})) == 0);  // wrong weight
}

TEST_CASE("coefficients agree with direct factorization counting") {
  for (const auto& p : length_ball(3, 4)) {
    MonomialExpansion f = stanley(p);
    for (const auto& lambda : partitions_of(length(p), 2)) {
      i64 expect = count_factorizations_in_order(p, lambda.parts());
      REQUIRE(f.coeff(lambda) == expect);
    }
  }
}

TEST_CASE("the coefficient is independent of the order the parts are consumed") {
  AP p = AP::make(4, {5, 0, 3, 2});
  for (const auto& lambda : partitions_of(length(p), 3)) {
    std::vector<i64> asc = lambda.parts();
    std::sort(asc.begin(), asc.end());
    REQUIRE(count_factorizations_in_order(p, lambda.parts()) ==
            count_factorizations_in_order(p, asc));
    REQUIRE(stanley_coefficient(p, lambda) ==
            count_factorizations_in_order(p, asc));
  }
}

TEST_CASE("expansion is invariant under window rotation") {
  for (const auto& p : length_ball(4, 4)) {
    REQUIRE(stanley(rotate(p)) == stanley(p));
  }
}

TEST_CASE("square-free coefficient counts reduced words") {
  for (const auto& p : length_ball(4, 5)) {
    i64 l = length(p);
    std::vector<i64> ones(static_cast<size_t>(l), 1);
    REQUIRE(reduced_word_count(p) ==
            stanley_coefficient(p, Partition::make(std::move(ones))));
  }
  for (const auto& p : length_ball(3, 4)) {
    REQUIRE(reduced_word_count(p) == static_cast<i64>(reduced_words(p).size()));
  }
}

TEST_CASE("minimal and maximal atom expansions of a long reflection") {
  // Two specific length-four elements with extreme expansions.
  REQUIRE(stanley(AP::make(4, {2, 3, 5, 0})).to_string() == "m[1,1,1,1]");
  REQUIRE(stanley(AP::make(4, {0, 1, 7, 2})).to_string() ==
          "m[1,1,1,1] + m[2,1,1] + m[2,2] + m[3,1]");
}

TEST_CASE("lexicographically largest term is the shape") {
  for (const auto& p : length_ball(4, 5)) {
    if (length(p) == 0) continue;
    MonomialExpansion f = stanley(p);
    Partition lambda = shape(p);
    REQUIRE(f.coeff(lambda) == 1);
    for (const auto& [mu, c] : f.terms()) {
      REQUIRE(c > 0);
      if (!(mu == lambda)) REQUIRE(dominance_less(mu, lambda));
    }
  }
}
