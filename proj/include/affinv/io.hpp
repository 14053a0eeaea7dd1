#pragma once
// Parsing and serialization: window/word/cycle notation for group elements,
// JSON wire formats for elements, expansions, transition reports, and the
// virtual-permutation certificates, plus a canonical plain-text form.

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/expansion.hpp"
#include "affinv/involution.hpp"
#include "affinv/tau.hpp"
#include "affinv/verify.hpp"
#include "affinv/virtualperm.hpp"

namespace affinv {

using ojson = nlohmann::ordered_json;

// ----- parsing ---------------------------------------------------------

inline std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "[2,3,5,0]" -> {2,3,5,0}
inline std::vector<i64> parse_window(const std::string& text) {
  std::string s = trimmed(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error("window must look like [a,b,...]");
  std::vector<i64> out;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = trimmed(tok);
    if (tok.empty()) throw Error("empty entry in window");
    out.push_back(std::stoll(tok));
  }
  if (out.empty()) throw Error("empty window");
  return out;
}

// "s1 s2 s4 s3" -> {1,2,4,3}
inline std::vector<i64> parse_word(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<i64> out;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw Error("word letters must look like s3");
    out.push_back(std::stoll(tok.substr(1)));
  }
  return out;
}

// "t(3,8) t(4,10)" -> {(3,8),(4,10)}
inline std::vector<std::pair<i64, i64>> parse_cycles(const std::string& text) {
  std::vector<std::pair<i64, i64>> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 6 || tok[0] != 't' || tok[1] != '(' || tok.back() != ')')
      throw Error("cycles must look like t(a,b)");
    std::string body = tok.substr(2, tok.size() - 3);
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw Error("cycles must look like t(a,b)");
    out.emplace_back(std::stoll(body.substr(0, comma)), std::stoll(body.substr(comma + 1)));
  }
  return out;
}

// Permutation from window, reduced word, or "id". n is required unless the
// text is a window (whose length determines it).
inline AffinePermutation parse_permutation(const std::string& text, i64 n = 0) {
  std::string s = trimmed(text);
  if (!s.empty() && s.front() == '[') {
    std::vector<i64> w = parse_window(s);
    const i64 size = static_cast<i64>(w.size());
    if (n != 0 && n != size) throw Error("window length disagrees with -n");
    return AffinePermutation::make(size, std::move(w));
  }
  if (n <= 0) throw Error("this element notation needs -n");
  if (s == "id" || s == "e" || s.empty()) return AffinePermutation::identity(n);
  AffinePermutation p = AffinePermutation::identity(n);
  for (i64 letter : parse_word(s)) p = multiply(p, AffinePermutation::s(n, letter));
  return p;
}

inline AffineInvolution parse_involution(const std::string& text, i64 n = 0) {
  std::string s = trimmed(text);
  if (!s.empty() && (s.front() == 't' || s == "id" || s == "e")) {
    if (n <= 0) throw Error("cycle notation needs -n");
    if (s == "id" || s == "e") return involution_from_cycles(n, {});
    return involution_from_cycles(n, parse_cycles(s));
  }
  return AffineInvolution::make(parse_permutation(s, n));
}

// ----- JSON ------------------------------------------------------------

inline i64 coeff_to_i64(const Coeff& c) {
  if (c > std::numeric_limits<i64>::max() || c < std::numeric_limits<i64>::min())
    throw Error("coefficient exceeds the 64-bit JSON range");
  return static_cast<i64>(c);
}

inline ojson to_json(const AffinePermutation& p) {
  return ojson{{"n", p.n()}, {"window", p.window()}};
}

inline ojson to_json(const AffineInvolution& z) {
  ojson cycles = ojson::array();
  for (auto [a, b] : two_cycles(z)) cycles.push_back(ojson::array({a, b}));
  return ojson{{"n", z.n()}, {"cycles", cycles}};
}

template <typename Basis>
ojson to_json(const Expansion<Basis>& f) {
  std::vector<Partition> order;
  for (const auto& [p, c] : f.terms()) order.push_back(p);
  std::sort(order.begin(), order.end(), reverse_lex_less);
  ojson terms = ojson::array();
  for (const auto& p : order)
    terms.push_back(ojson{{"partition", p.parts()}, {"coeff", coeff_to_i64(f.coeff(p))}});
  return ojson{{"basis", std::string(1, Basis::symbol)}, {"degree", f.degree()}, {"terms", terms}};
}

template <typename Basis>
Expansion<Basis> expansion_from_json(const ojson& j) {
  if (j.at("basis").get<std::string>() != std::string(1, Basis::symbol))
    throw Error("expansion basis mismatch");
  Expansion<Basis> out(j.at("degree").get<i64>());
  for (const auto& t : j.at("terms"))
    out.add_term(Partition::make(t.at("partition").get<std::vector<i64>>()),
                 Coeff(t.at("coeff").get<i64>()));
  return out;
}

inline ojson to_json(const LsTransitionReport& r) {
  ojson left = ojson::array(), right = ojson::array();
  for (const auto& p : r.left) left.push_back(to_json(p));
  for (const auto& p : r.right) right.push_back(to_json(p));
  ojson sum = r.equal ? to_json(r.left_sum)
                      : ojson{{"left", to_json(r.left_sum)}, {"right", to_json(r.right_sum)}};
  return ojson{{"r", r.r}, {"left", left}, {"right", right}, {"sum", sum}, {"equal", r.equal}};
}

inline ojson to_json(const InvTransitionReport& r) {
  ojson left = ojson::array(), right = ojson::array();
  for (const auto& z : r.left) left.push_back(to_json(z));
  for (const auto& z : r.right) right.push_back(to_json(z));
  ojson sum = r.equal ? to_json(r.left_sum)
                      : ojson{{"left", to_json(r.left_sum)}, {"right", to_json(r.right_sum)}};
  return ojson{{"p", r.p}, {"q", r.q}, {"left", left}, {"right", right},
               {"sum", sum}, {"equal", r.equal}};
}

// ----- virtual permutations ---------------------------------------------

inline std::string item_to_string(i64 x) {
  if (x == virt::kP) return "P";
  if (x == virt::kQ) return "Q";
  if (x == virt::kR) return "R";
  return std::to_string(x);
}

inline ojson order_to_json(const virt::LinearOrder& o) {
  ojson a = ojson::array();
  for (i64 x : o) a.push_back(item_to_string(x));
  return a;
}

inline ojson order_map_to_json(const virt::OrderMap& om) {
  ojson a = ojson::array();
  for (const auto& [dom, set] : om) {
    ojson images = ojson::array();
    for (const auto& cod : set) images.push_back(order_to_json(cod));
    a.push_back(ojson{{"domain", order_to_json(dom)}, {"images", images}});
  }
  return a;
}

inline ojson to_json(const virt::VirtualPermutation& vp) {
  return ojson{{"m", vp.m},
               {"varpi", vp.varpi},
               {"M", order_map_to_json(vp.M)},
               {"D", order_map_to_json(vp.D)},
               {"S", order_map_to_json(vp.S)}};
}

inline std::string order_to_text(const virt::LinearOrder& o) {
  std::string s;
  for (size_t k = 0; k < o.size(); ++k) {
    if (k) s += ' ';
    s += item_to_string(o[k]);
  }
  return s;
}

// Canonical diffable text: one line per (family, domain) with the stored
// codomain orders parenthesized.
inline std::string to_text(const virt::VirtualPermutation& vp) {
  std::ostringstream os;
  os << "varpi:";
  for (i64 v : vp.varpi) os << ' ' << v;
  os << '\n';
  auto emit = [&](const char* fam, const virt::OrderMap& om) {
    for (const auto& [dom, set] : om) {
      os << fam << ": " << order_to_text(dom) << " =>";
      if (set.empty()) os << " -";
      for (const auto& cod : set) os << " (" << order_to_text(cod) << ')';
      os << '\n';
    }
  };
  emit("M", vp.M);
  emit("D", vp.D);
  emit("S", vp.S);
  return os.str();
}

inline ojson to_json(const CoveringCase& c) {
  return ojson{{"case", c.name},
               {"y", c.y},
               {"iPrime", c.i},
               {"jPrime", c.j},
               {"z", c.z},
               {"maximalAtom", to_json(c.maximal)},
               {"transformed", to_json(c.transformed)},
               {"premiseOk", c.premise_ok},
               {"verdict", c.verdict}};
}

inline ojson to_json(const TogglingCase& c) {
  return ojson{{"case", c.name},
               {"y", c.y},
               {"pi", c.varpi_inv},
               {"iPrime", c.i},
               {"jPrime", c.j},
               {"kPrime", c.k},
               {"lPrime", c.l},
               {"maximalAtom", to_json(c.maximal)},
               {"transformed", to_json(c.transformed)},
               {"premiseOk", c.premise_ok},
               {"verdict", c.verdict}};
}

template <typename Case>
ojson cases_to_json(const std::vector<Case>& cases) {
  bool all = true;
  ojson arr = ojson::array();
  for (const auto& c : cases) {
    arr.push_back(to_json(c));
    all = all && c.premise_ok && c.verdict;
  }
  return ojson{{"summary", ojson{{"cases", cases.size()}, {"allVerified", all}}},
               {"cases", arr}};
}

}  // namespace affinv
