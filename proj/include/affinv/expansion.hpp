#pragma once
// Homogeneous symmetric-function expansions with exact integer coefficients,
// tagged by basis (monomial m_lambda or affine Schur F_lambda) so that
// expansions in different bases cannot be mixed accidentally.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

#include "affinv/partition.hpp"

namespace affinv {

using Coeff = boost::multiprecision::cpp_int;

// Two expansions of different homogeneous degrees were combined.
struct DegreeMismatch : Error { using Error::Error; };

struct MonomialBasis {
  static constexpr char symbol = 'm';
};
struct AffineSchurBasis {
  static constexpr char symbol = 'F';
};

template <typename Basis>
class Expansion {
 public:
  explicit Expansion(i64 degree = 0) : degree_(degree) {
    if (degree < 0) throw Error("degree must be nonnegative");
  }

  i64 degree() const { return degree_; }
  const std::map<Partition, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Partition& p, const Coeff& c) {
    if (c == 0) return;
    if (p.weight() != degree_)
      throw DegreeMismatch("term weight differs from the expansion degree");
    Coeff& slot = terms_[p];
    slot += c;
    if (slot == 0) terms_.erase(p);
  }

  friend Expansion add(const Expansion& a, const Expansion& b) {
    if (a.degree_ != b.degree_)
      throw DegreeMismatch("cannot add expansions of different degrees");
    Expansion out = a;
    for (const auto& [p, c] : b.terms_) out.add_term(p, c);
    return out;
  }

  friend Expansion scale(const Expansion& a, const Coeff& k) {
    Expansion out(a.degree_);
    if (k == 0) return out;
    for (const auto& [p, c] : a.terms_) out.add_term(p, c * k);
    return out;
  }

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Expansion& a, const Expansion& b) { return !(a == b); }

  // Human-readable form, terms in ascending lexicographic order of partition,
  // e.g. "F[1,1,1,1] + F[2,1,1] + F[3,1]" or "2m[1,1] + m[2]"; zero prints 0.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {  // std::map iterates in lex order
      if (!first) os << " + ";
      first = false;
      if (p.empty()) {
        os << c;
        continue;
      }
      if (c != 1) os << c;
      os << Basis::symbol << p.to_string();
    }
    return os.str();
  }

 private:
  i64 degree_;
  std::map<Partition, Coeff> terms_;
};

using MonomialExpansion = Expansion<MonomialBasis>;
using SchurExpansion = Expansion<AffineSchurBasis>;

}  // namespace affinv
