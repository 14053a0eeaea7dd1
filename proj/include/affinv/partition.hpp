#pragma once
// Integer partitions with the dominance and lexicographic comparisons used to
// organize symmetric-function expansions.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "affinv/core.hpp"

namespace affinv {

// Two expansions over partitions of different weights were combined.
struct WeightMismatch : Error { using Error::Error; };

class Partition {
 public:
  Partition() = default;

  static Partition make(std::vector<i64> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw Error("partition parts must be positive");
      if (i + 1 < parts.size() && parts[i] < parts[i + 1])
        throw Error("partition parts must be weakly decreasing");
    }
    return Partition(std::move(parts));
  }

  static Partition sorted_from(std::vector<i64> values) {
    std::sort(values.begin(), values.end(), std::greater<i64>());
    return make(std::move(values));
  }

  const std::vector<i64>& parts() const { return parts_; }
  i64 weight() const {
    i64 s = 0;
    for (i64 p : parts_) s += p;
    return s;
  }
  i64 num_parts() const { return static_cast<i64>(parts_.size()); }
  i64 part(i64 i) const {  // 1-indexed, 0 beyond the last part
    return (i >= 1 && i <= num_parts()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const {
    std::vector<i64> t;
    if (!parts_.empty()) {
      t.assign(static_cast<size_t>(parts_[0]), 0);
      for (i64 p : parts_)
        for (i64 j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    }
    return Partition(std::move(t));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Default ordering: lexicographic on the part vectors.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  // Bracket form, e.g. [3,1,1].
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ']';
    return os.str();
  }

  // Exponent form, e.g. 31^2 for [3,1,1]; empty partition prints as 0.
  std::string exponent_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    size_t i = 0;
    while (i < parts_.size()) {
      size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      os << parts_[i];
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
    return os.str();
  }

 private:
  explicit Partition(std::vector<i64> parts) : parts_(std::move(parts)) {}
  std::vector<i64> parts_;
};

// Strict dominance: same weight, mu != lambda, and every prefix sum of mu is
// at most the corresponding prefix sum of lambda.
inline bool dominance_less(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw WeightMismatch("dominance compares partitions of equal weight");
  if (mu == lambda) return false;
  i64 pm = 0, pl = 0;
  i64 rows = std::max(mu.num_parts(), lambda.num_parts());
  for (i64 i = 1; i <= rows; ++i) {
    pm += mu.part(i);
    pl += lambda.part(i);
    if (pm > pl) return false;
  }
  return true;
}

inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  return mu == lambda || dominance_less(mu, lambda);
}

// Reverse-lexicographic order on equal-weight partitions: lambda before mu
// when lambda is lexicographically larger. Used for serialized term order.
inline bool reverse_lex_less(const Partition& a, const Partition& b) {
  return b.parts() < a.parts();
}

inline std::vector<Partition> partitions_of(i64 weight, i64 max_part) {
  std::vector<Partition> out;
  std::vector<i64> cur;
  auto rec = [&](auto&& self, i64 remaining, i64 cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition::make(cur));
      return;
    }
    for (i64 p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (weight >= 0) rec(rec, weight, max_part);
  return out;
}

}  // namespace affinv
