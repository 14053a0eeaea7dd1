#pragma once
// Command-line front end. run_cli is a pure function of its arguments and
// streams so the test suite can drive it without spawning processes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affinv/core.hpp"
#include "affinv/enumerate.hpp"
#include "affinv/expansion.hpp"
#include "affinv/involution.hpp"
#include "affinv/io.hpp"
#include "affinv/schur.hpp"
#include "affinv/stanley.hpp"
#include "affinv/tau.hpp"
#include "affinv/verify.hpp"
#include "affinv/virtualperm.hpp"

namespace affinv {

namespace detail {

inline void guard_degree(i64 degree, i64 max_degree) {
  if (degree > max_degree) {
    std::ostringstream os;
    os << "degree " << degree << " exceeds --max-degree " << max_degree
       << "; raise the limit explicitly if you really want this";
    throw Error(os.str());
  }
}

template <typename Basis>
void print_expansion(const Expansion<Basis>& f, bool json, std::ostream& os) {
  if (json)
    os << to_json(f).dump(2) << '\n';
  else
    os << f.to_string() << '\n';
}

}  // namespace detail

// Exit codes: 0 success / property verified, 1 verification failure,
// 2 bad usage or malformed input.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CLI::App app{"Exact combinatorics of affine permutations, their involutions,"
               " Stanley symmetric functions, and covering transformations"};
  app.name("affinv");
  app.require_subcommand(1);

  std::string element, element2, mode, file = "-", outfile, basis = "m";
  i64 n = 0, i = 0, j = 0, r = 0, widen = 0, max_degree = 14, max_hat = 4, max_len = 4;
  bool json = false, minus = false, plus = false, use_inv = false;

  auto add_common = [&](CLI::App* sub, bool with_basis = false) {
    sub->add_option("-n,--rank", n, "period n of the affine symmetric group");
    sub->add_flag("--json", json, "emit JSON instead of text");
    sub->add_option("--out", outfile, "write the result to a file instead of stdout");
    sub->add_option("--max-degree", max_degree, "refuse computations above this degree")
        ->capture_default_str();
    if (with_basis)
      sub->add_option("--basis", basis, "output basis: m (monomial) or F (affine Schur)")
          ->check(CLI::IsMember({"m", "F"}));
  };

  auto* c_stanley = app.add_subcommand(
      "stanley", "symmetric function of an affine permutation");
  c_stanley->add_option("element", element, "window [..], word \"s1 s2\", or id")->required();
  add_common(c_stanley, true);

  auto* c_inv = app.add_subcommand(
      "inv-stanley", "symmetric function of an affine involution");
  c_inv->add_option("element", element, "window [..], cycles \"t(a,b) ..\", or id")->required();
  add_common(c_inv, true);

  auto* c_atoms = app.add_subcommand("atoms", "minimal-length factor permutations of an involution");
  c_atoms->add_option("element", element)->required();
  add_common(c_atoms);

  auto* c_hecke = app.add_subcommand("hecke-atoms", "all permutations whose self-product is the involution");
  c_hecke->add_option("element", element)->required();
  add_common(c_hecke);

  auto* c_code = app.add_subcommand("code", "inversion code (or involution code with --inv)");
  c_code->add_option("element", element)->required();
  c_code->add_flag("--inv", use_inv, "treat the element as an involution");
  add_common(c_code);

  auto* c_shape = app.add_subcommand("shape", "partition shape (or involution shape with --inv)");
  c_shape->add_option("element", element)->required();
  c_shape->add_flag("--inv", use_inv, "treat the element as an involution");
  add_common(c_shape);

  auto* c_amin = app.add_subcommand("alpha-min", "lexicographically extreme minimal atom");
  c_amin->add_option("element", element)->required();
  add_common(c_amin);

  auto* c_amax = app.add_subcommand("alpha-max", "lexicographically extreme maximal atom");
  c_amax->add_option("element", element)->required();
  add_common(c_amax);

  auto* c_tau = app.add_subcommand("tau", "covering transformation applied to an involution");
  c_tau->add_option("i", i, "first marked position")->required();
  c_tau->add_option("j", j, "second marked position")->required();
  c_tau->add_option("element", element)->required();
  add_common(c_tau);

  auto* c_phi = app.add_subcommand("phi", "involution covers entering/leaving a cycle endpoint");
  c_phi->add_option("element", element)->required();
  c_phi->add_option("r", r, "cycle endpoint")->required();
  c_phi->add_flag("--minus", minus, "covers y <. tau_ip(y) entering the left endpoint");
  c_phi->add_flag("--plus", plus, "covers y <. tau_qj(y) leaving the right endpoint");
  c_phi->add_option("--widen", widen, "extra search span (stability check)");
  add_common(c_phi);

  auto* c_psi = app.add_subcommand("psi", "Bruhat covers of a permutation in column r");
  c_psi->add_option("element", element)->required();
  c_psi->add_option("r", r, "column")->required();
  c_psi->add_flag("--minus", minus, "covers pi < pi t_ir with i < r");
  c_psi->add_flag("--plus", plus, "covers pi < pi t_rj with j > r");
  c_psi->add_option("--widen", widen, "extra search span (stability check)");
  add_common(c_psi);

  auto* c_trans = app.add_subcommand("transition", "transition identity for a permutation column");
  c_trans->add_option("element", element)->required();
  c_trans->add_option("r", r, "column")->required();
  c_trans->add_option("--widen", widen, "extra search span (stability check)");
  add_common(c_trans);

  auto* c_itrans = app.add_subcommand("inv-transition", "transition identity for an involution cycle");
  c_itrans->add_option("element", element)->required();
  c_itrans->add_option("p", r, "left endpoint of a cycle of the involution")->required();
  c_itrans->add_option("--widen", widen, "extra search span (stability check)");
  add_common(c_itrans);

  auto* c_toggle = app.add_subcommand("toggle", "partner cover when the transformation fixes the involution");
  c_toggle->add_option("i", i)->required();
  c_toggle->add_option("j", j)->required();
  c_toggle->add_option("pi", element, "atom permutation")->required();
  c_toggle->add_option("y", element2, "involution")->required();
  add_common(c_toggle);

  auto* c_schur = app.add_subcommand("schur-expand", "rewrite a monomial expansion in the affine Schur basis");
  c_schur->add_option("file", file, "JSON expansion file, or - for stdin")->capture_default_str();
  add_common(c_schur);

  auto* c_verify = app.add_subcommand("verify", "re-run a mechanical verification");
  c_verify->add_option("mode", mode, "covering | toggling | transition | conjecture-omega")
      ->required()
      ->check(CLI::IsMember({"covering", "toggling", "transition", "conjecture-omega"}));
  c_verify->add_option("--max-hat", max_hat, "bound on involution hat-lengths")
      ->capture_default_str();
  c_verify->add_option("--max-length", max_len, "bound on permutation lengths")
      ->capture_default_str();
  c_verify->add_option("--widen", widen, "extra search span (stability check)");
  add_common(c_verify);

  auto* c_self = app.add_subcommand("selftest", "run the built-in golden checks");
  add_common(c_self);

  try {
    std::vector<const char*> argv;
    argv.push_back("affinv");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  std::ofstream fout;
  std::ostream* os = &out;
  if (!outfile.empty()) {
    fout.open(outfile);
    if (!fout) {
      err << "error: cannot open " << outfile << " for writing\n";
      return 2;
    }
    os = &fout;
  }

  try {
    CLI::App* sub = app.get_subcommands().at(0);
    const std::string name = sub->get_name();

    if (name == "stanley") {
      AffinePermutation p = parse_permutation(element, n);
      detail::guard_degree(length(p), max_degree);
      MonomialExpansion f = stanley(p);
      if (basis == "F")
        detail::print_expansion(to_affine_schur(f, p.n()), json, *os);
      else
        detail::print_expansion(f, json, *os);
      return 0;
    }

    if (name == "inv-stanley") {
      AffineInvolution z = parse_involution(element, n);
      detail::guard_degree(hat_length(z), max_degree);
      MonomialExpansion f = involution_stanley(z);
      if (basis == "F")
        detail::print_expansion(to_affine_schur(f, z.n()), json, *os);
      else
        detail::print_expansion(f, json, *os);
      return 0;
    }

    if (name == "atoms" || name == "hecke-atoms") {
      AffineInvolution z = parse_involution(element, n);
      detail::guard_degree(hat_length(z), max_degree);
      auto list = name == "atoms" ? atoms(z) : hecke_atoms(z);
      if (json) {
        ojson arr = ojson::array();
        for (const auto& p : list) arr.push_back(to_json(p));
        *os << arr.dump(2) << '\n';
      } else {
        for (const auto& p : list) *os << p.to_string() << '\n';
      }
      return 0;
    }

    if (name == "code") {
      std::vector<i64> c;
      i64 period = 0;
      if (use_inv) {
        AffineInvolution z = parse_involution(element, n);
        c = involution_code(z);
        period = z.n();
      } else {
        AffinePermutation p = parse_permutation(element, n);
        c = code(p);
        period = p.n();
      }
      if (json) {
        *os << ojson{{"n", period}, {"code", c}}.dump(2) << '\n';
      } else {
        *os << '[';
        for (size_t k = 0; k < c.size(); ++k) *os << (k ? "," : "") << c[k];
        *os << "]\n";
      }
      return 0;
    }

    if (name == "shape") {
      Partition lambda = use_inv ? mu_shape(parse_involution(element, n))
                                 : shape(parse_permutation(element, n));
      if (json)
        *os << ojson{{"partition", lambda.parts()}}.dump(2) << '\n';
      else
        *os << lambda.to_string() << '\n';
      return 0;
    }

    if (name == "alpha-min" || name == "alpha-max") {
      AffineInvolution z = parse_involution(element, n);
      AffinePermutation a = name == "alpha-min" ? alpha_min(z) : alpha_max(z);
      if (json)
        *os << to_json(a).dump(2) << '\n';
      else
        *os << a.to_string() << '\n';
      return 0;
    }

    if (name == "tau") {
      AffineInvolution y = parse_involution(element, n);
      AffineInvolution z = tau(y, i, j);
      if (json) {
        ojson doc = to_json(z);
        doc["window"] = z.perm().window();
        doc["moved"] = !(z == y);
        *os << doc.dump(2) << '\n';
      } else {
        *os << "window: " << z.perm().to_string() << '\n'
            << "cycles: " << cycles_to_string(z) << '\n';
      }
      return 0;
    }

    if (name == "phi") {
      if (minus == plus) throw Error("phi needs exactly one of --minus / --plus");
      AffineInvolution y = parse_involution(element, n);
      auto list = minus ? phi_minus(y, r, widen) : phi_plus(y, r, widen);
      if (json) {
        ojson arr = ojson::array();
        for (const auto& z : list) arr.push_back(to_json(z));
        *os << arr.dump(2) << '\n';
      } else {
        for (const auto& z : list) *os << cycles_to_string(z) << '\n';
      }
      return 0;
    }

    if (name == "psi") {
      if (minus == plus) throw Error("psi needs exactly one of --minus / --plus");
      AffinePermutation p = parse_permutation(element, n);
      auto list = minus ? psi_minus(p, r, widen) : psi_plus(p, r, widen);
      if (json) {
        ojson arr = ojson::array();
        for (const auto& q : list) arr.push_back(to_json(q));
        *os << arr.dump(2) << '\n';
      } else {
        for (const auto& q : list) *os << q.to_string() << '\n';
      }
      return 0;
    }

    if (name == "transition") {
      AffinePermutation p = parse_permutation(element, n);
      detail::guard_degree(length(p), max_degree);
      LsTransitionReport rep = check_ls_transition(p, r, widen);
      if (json) {
        *os << to_json(rep).dump(2) << '\n';
      } else {
        *os << "left: ";
        for (const auto& q : rep.left) *os << ' ' << q.to_string();
        *os << "\nright:";
        for (const auto& q : rep.right) *os << ' ' << q.to_string();
        *os << "\nsum:   " << rep.left_sum.to_string() << '\n'
            << "equal: " << (rep.equal ? "yes" : "NO") << '\n';
        if (!rep.equal) *os << "right sum: " << rep.right_sum.to_string() << '\n';
      }
      return rep.equal ? 0 : 1;
    }

    if (name == "inv-transition") {
      AffineInvolution y = parse_involution(element, n);
      detail::guard_degree(hat_length(y) + 1, max_degree);
      InvTransitionReport rep = check_involution_transition(y, r, widen);
      if (json) {
        *os << to_json(rep).dump(2) << '\n';
      } else {
        auto emit = [&](const char* label, const std::vector<AffineInvolution>& zs) {
          *os << label;
          bool first = true;
          for (const auto& z : zs) {
            if (!first) *os << ';';
            first = false;
            *os << ' ' << cycles_to_string(z);
          }
          *os << '\n';
        };
        *os << "p: " << rep.p << "  q: " << rep.q << '\n';
        emit("left: ", rep.left);
        emit("right:", rep.right);
        *os << "sum:   " << rep.left_sum.to_string() << '\n'
            << "equal: " << (rep.equal ? "yes" : "NO") << '\n';
        if (!rep.equal) *os << "right sum: " << rep.right_sum.to_string() << '\n';
      }
      return rep.equal ? 0 : 1;
    }

    if (name == "toggle") {
      AffinePermutation p = parse_permutation(element, n);
      AffineInvolution y = parse_involution(element2, p.n());
      ToggleResult t = toggle(p, i, j, y);
      if (json) {
        *os << ojson{{"case", t.case_id}, {"k", t.k},       {"l", t.l},
                     {"image", to_json(t.image)},           {"partners", t.partner_count}}
                   .dump(2)
            << '\n';
      } else {
        *os << "case: " << t.case_id << '\n'
            << "k: " << t.k << '\n'
            << "l: " << t.l << '\n'
            << "image: " << t.image.to_string() << '\n'
            << "partners: " << t.partner_count << '\n';
      }
      return 0;
    }

    if (name == "schur-expand") {
      if (n <= 0) throw Error("schur-expand needs -n");
      ojson doc;
      if (file == "-") {
        doc = ojson::parse(in);
      } else {
        std::ifstream f(file);
        if (!f) throw Error("cannot open " + file);
        doc = ojson::parse(f);
      }
      MonomialExpansion m = expansion_from_json<MonomialBasis>(doc);
      detail::guard_degree(m.degree(), max_degree);
      detail::print_expansion(to_affine_schur(m, n), json, *os);
      return 0;
    }

    if (name == "verify") {
      if (mode == "covering" || mode == "toggling") {
        bool ok = true;
        ojson doc;
        std::ostringstream text;
        if (mode == "covering") {
          auto cases = verify_covering_cases();
          for (const auto& c : cases) {
            ok = ok && c.premise_ok && c.verdict;
            text << c.name << " (i,j)=(" << c.i << ',' << c.j << "): "
                 << (c.premise_ok && c.verdict ? "ok" : "FAIL") << '\n';
          }
          text << cases.size() << " covering cases, "
               << (ok ? "all verified" : "verification FAILED") << '\n';
          doc = cases_to_json(cases);
        } else {
          auto cases = verify_toggling_cases();
          for (const auto& c : cases) {
            ok = ok && c.premise_ok && c.verdict;
            text << c.name << " (i,j)=(" << c.i << ',' << c.j << ") (k,l)=(" << c.k << ','
                 << c.l << "): " << (c.premise_ok && c.verdict ? "ok" : "FAIL") << '\n';
          }
          text << cases.size() << " toggling cases, "
               << (ok ? "all verified" : "verification FAILED") << '\n';
          doc = cases_to_json(cases);
        }
        if (json)
          *os << doc.dump(2) << '\n';
        else
          *os << text.str();
        return ok ? 0 : 1;
      }

      if (mode == "transition") {
        if (n <= 0) throw Error("verify transition needs -n");
        i64 ls_checked = 0, inv_checked = 0;
        std::vector<std::string> failures;
        for (const auto& p : length_ball(n, max_len)) {
          for (i64 col = 1; col <= n; ++col) {
            LsTransitionReport rep = check_ls_transition(p, col, widen);
            ++ls_checked;
            if (!rep.equal)
              failures.push_back("permutation " + p.to_string() + " column " +
                                 std::to_string(col));
          }
        }
        for (const auto& z : involution_ball(n, max_hat)) {
          for (auto [p, q] : cycle_set(z)) {
            InvTransitionReport rep = check_involution_transition(z, p, widen);
            ++inv_checked;
            if (!rep.equal)
              failures.push_back("involution " + cycles_to_string(z) + " endpoint " +
                                 std::to_string(p));
          }
        }
        bool ok = failures.empty();
        if (json) {
          *os << ojson{{"n", n},
                       {"maxLength", max_len},
                       {"maxHat", max_hat},
                       {"lsChecked", ls_checked},
                       {"invChecked", inv_checked},
                       {"ok", ok},
                       {"failures", failures}}
                     .dump(2)
              << '\n';
        } else {
          *os << "transition identities on n=" << n << ": " << ls_checked
              << " permutation columns (length <= " << max_len << "), " << inv_checked
              << " involution cycles (hat-length <= " << max_hat << "): "
              << (ok ? "all sums equal" : "FAILURES") << '\n';
          for (const auto& f : failures) *os << "  " << f << '\n';
        }
        return ok ? 0 : 1;
      }

      // conjecture-omega
      if (n <= 0) throw Error("verify conjecture-omega needs -n");
      OmegaConjectureReport rep = verify_omega_conjecture(n, max_hat);
      if (json) {
        ojson doc{{"n", rep.n}, {"maxHat", rep.max_hat}, {"checked", rep.checked},
                  {"ok", rep.ok}};
        doc["witness"] = rep.witness ? to_json(*rep.witness) : ojson(nullptr);
        *os << doc.dump(2) << '\n';
      } else {
        *os << "omega-invariance on n=" << rep.n << ": checked " << rep.checked
            << " involutions (hat-length <= " << rep.max_hat << "): "
            << (rep.ok ? "all expansions invariant" : "COUNTEREXAMPLE") << '\n';
        if (rep.witness) *os << "  witness: " << rep.witness->perm().to_string() << '\n';
      }
      return rep.ok ? 0 : 1;
    }

    if (name == "selftest") {
      struct Check {
        std::string label;
        bool ok;
      };
      std::vector<Check> checks;
      auto push = [&](std::string label, bool ok) { checks.push_back({std::move(label), ok}); };

      AffinePermutation g = parse_permutation("s1 s2 s4 s3", 4);
      push("word product gives window [0,3,6,1]",
           g == AffinePermutation::make(4, {0, 3, 6, 1}));
      push("monomial expansion of [0,3,6,1]",
           stanley(g).to_string() == "2m[1,1,1,1] + m[2,1,1]");

      AffineInvolution z38 = involution_from_cycles(4, {{3, 8}});
      push("Schur expansion of t(3,8)",
           to_affine_schur(involution_stanley(z38), 4).to_string() ==
               "F[1,1,1,1] + F[2,1,1] + F[3,1]");
      push("t(3,8) has 3 atoms and 5 Hecke atoms",
           atoms(z38).size() == 3 && hecke_atoms(z38).size() == 5);
      push("extreme atoms of t(3,8)",
           alpha_min(z38) == AffinePermutation::make(4, {2, 3, 5, 0}) &&
               alpha_max(z38) == AffinePermutation::make(4, {0, 1, 7, 2}));

      AffineInvolution y8 = involution_from_cycles(8, {{1, 4}, {5, 7}});
      push("covering transformation at (4,5)",
           tau(y8, 4, 5) == involution_from_cycles(8, {{1, 5}, {4, 7}}));

      AffineInvolution y13 = involution_from_cycles(4, {{1, 3}});
      ToggleResult t = toggle(AffinePermutation::make(4, {2, 3, 1, 4}), 1, 2, y13);
      push("toggle partner at (1,2)",
           t.k == 2 && t.l == 3 && t.image == AffinePermutation::make(4, {3, 1, 2, 4}) &&
               t.case_id == "A1");

      push("transition identity for [1,0,2,7] in column 3",
           check_ls_transition(AffinePermutation::make(4, {1, 0, 2, 7}), 3).equal);
      push("cycle transition identity for t(3,8) at 2",
           check_involution_transition(z38, 2).equal);

      bool all = true;
      for (const auto& c : checks) {
        all = all && c.ok;
        *os << (c.ok ? "ok:   " : "FAIL: ") << c.label << '\n';
      }
      *os << (all ? "selftest passed" : "selftest FAILED") << '\n';
      return all ? 0 : 1;
    }

    err << "error: unhandled subcommand " << name << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace affinv
