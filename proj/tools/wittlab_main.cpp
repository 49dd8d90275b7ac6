// wittlab: exact structure checks for the Lie algebras W, W~ and W(2,2) —
// bracket evaluation, windowed second cohomology, derivation spaces and the
// automorphism group, all over exact rationals.

#include "wittlab/algebra.hpp"
#include "wittlab/automorphisms.hpp"
#include "wittlab/cohomology.hpp"
#include "wittlab/derivations.hpp"
#include "wittlab/element.hpp"
#include "wittlab/report.hpp"
#include "wittlab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace wittlab;

int default_window() {
  if (const char* env = std::getenv("WITTLAB_WINDOW")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
  }
  return 6;
}

std::string one_line(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  for (auto& c : text) {
    if (c == '\n') c = ';';
  }
  return text;
}

int emit(const ReportDocument& doc, bool json, const std::string& plain = "") {
  if (json) {
    std::cout << doc.to_json() << "\n";
  } else if (!plain.empty()) {
    std::cout << plain << "\n";
  } else {
    std::cout << doc.to_text();
  }
  return doc.all_pass() ? 0 : 1;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wittlab: exact verification of the structure of the Lie algebras "
      "W, W~ and W(2,2)"};
  app.require_subcommand(1);

  bool json = false;
  int window = default_window();
  std::string algebra;
  int degree = 0;
  std::uint64_t seed = 20260811;
  std::string verify_target = "all";
  std::string der_target = "algebra";
  std::vector<std::string> args;

  std::function<int()> action;

  auto add_common = [&](CLI::App* cmd, bool with_algebra, bool with_degree) {
    cmd->add_flag("--json", json, "emit the report as JSON");
    cmd->add_option("--window", window,
                    "window bound N (default 6, env WITTLAB_WINDOW overrides)");
    if (with_algebra) cmd->add_option("--algebra", algebra, "w | wtilde | w22");
    if (with_degree) cmd->add_option("--degree", degree, "graded degree");
  };

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("target", verify_target, "jacobi | cocycles | derivations | automorphisms | all")
      ->check(CLI::IsMember({"jacobi", "cocycles", "derivations", "automorphisms", "all"}));
  add_common(verify, true, false);
  verify->add_option("--seed", seed, "seed for the randomized sweeps");
  verify->callback([&] {
    action = [&]() -> int {
      VerifyOptions options;
      options.window = window;
      options.seed = seed;
      if (!algebra.empty()) options.algebra = parse_algebra(algebra);
      ReportDocument doc;
      if (verify_target == "jacobi") {
        doc = verify_jacobi(options);
      } else if (verify_target == "cocycles") {
        doc = verify_cocycles(options);
      } else if (verify_target == "derivations") {
        doc = verify_derivations(options);
      } else if (verify_target == "automorphisms") {
        doc = verify_automorphisms(options);
      } else {
        doc = verify_all(options);
      }
      return emit(doc, json);
    };
  });

  // bracket -----------------------------------------------------------------
  auto* bracket_cmd = app.add_subcommand("bracket", "evaluate [x, y] in the chosen algebra");
  bracket_cmd->add_option("elements", args, "two element strings, e.g. \"L[2]\" \"L[-2]\"")
      ->expected(2);
  add_common(bracket_cmd, true, false);
  bracket_cmd->callback([&] {
    action = [&]() -> int {
      const auto start = std::chrono::steady_clock::now();
      const AlgebraKind kind = algebra.empty() ? AlgebraKind::w : parse_algebra(algebra);
      const Element x = parse_element(args[0], kind);
      const Element y = parse_element(args[1], kind);
      const std::string value = to_text(bracket(x, y, kind), kind);
      ReportDocument doc;
      doc.command = "bracket";
      doc.algebra = std::string(algebra_name(kind));
      doc.window = window;
      doc.add("bracket", "", value, true);
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json, value);
    };
  });

  // h2 ------------------------------------------------------------------
  auto* h2 = app.add_subcommand("h2", "windowed second cohomology in one degree");
  add_common(h2, true, true);
  h2->callback([&] {
    action = [&]() -> int {
      const auto start = std::chrono::steady_clock::now();
      const AlgebraKind kind = algebra.empty() ? AlgebraKind::w : parse_algebra(algebra);
      H2Report r = compute_h2_window(kind, Window(window), degree);
      ReportDocument doc;
      doc.command = "h2";
      doc.algebra = std::string(algebra_name(kind));
      doc.window = window;
      doc.add("unknowns", "", std::to_string(r.unknowns), true);
      doc.add("equations", "", std::to_string(r.equations), true);
      doc.add("cocycle_dim", "", std::to_string(r.cocycle_dim), true);
      doc.add("coboundary_dim", "", std::to_string(r.coboundary_dim), true);
      doc.add("h2_dim", "", std::to_string(r.h2_dim), true);
      for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        doc.add("representative" + std::to_string(i), "",
                one_line(r.representatives[i].to_text()), true);
      }
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json);
    };
  });

  // der ------------------------------------------------------------------
  auto* der = app.add_subcommand("der", "windowed derivation space in one degree");
  der->add_option("--target", der_target, "algebra | i")
      ->check(CLI::IsMember({"algebra", "i"}));
  add_common(der, true, true);
  der->callback([&] {
    action = [&]() -> int {
      const auto start = std::chrono::steady_clock::now();
      const AlgebraKind kind = algebra.empty() ? AlgebraKind::w : parse_algebra(algebra);
      const DerivationTarget target = der_target == "i" ? DerivationTarget::i_valued
                                                        : DerivationTarget::algebra_valued;
      DerivationSpaceReport r = compute_der_space(kind, target, degree, Window(window));
      ReportDocument doc;
      doc.command = "der";
      doc.algebra = std::string(algebra_name(kind));
      doc.window = window;
      doc.add("unknowns", "", std::to_string(r.unknowns), true);
      doc.add("equations", "", std::to_string(r.equations), true);
      doc.add("derivation_dim", "", std::to_string(r.derivation_dim), true);
      doc.add("inner_dim", "", std::to_string(r.inner_dim), true);
      doc.add("outer_dim", "", std::to_string(r.outer_dim), true);
      for (std::size_t i = 0; i < r.outer_basis.size(); ++i) {
        doc.add("outer_basis" + std::to_string(i), "",
                one_line(r.outer_basis[i].to_text()), true);
      }
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json);
    };
  });

  // aut ------------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism group operations");
  aut->require_subcommand(1);

  auto* aut_apply = aut->add_subcommand("apply", "apply an automorphism to an element");
  aut_apply->add_option("args", args, "automorphism and element strings")->expected(2);
  add_common(aut_apply, false, false);
  aut_apply->callback([&] {
    action = [&]() -> int {
      const auto start = std::chrono::steady_clock::now();
      const AutomorphismNF f = parse_automorphism(args[0]);
      const Element x = parse_element(args[1], AlgebraKind::w);
      const std::string value = to_text(apply_nf(f, x), AlgebraKind::w);
      ReportDocument doc;
      doc.command = "aut apply";
      doc.algebra = "w";
      doc.window = window;
      doc.add("image", "", value, true);
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json, value);
    };
  });

  auto make_word_action = [&](const char* name, bool invert) {
    return [&, name, invert]() -> int {
      const auto start = std::chrono::steady_clock::now();
      // each argument is an automorphism (normal form or generator word);
      // arguments compose rightmost-first
      AutomorphismNF nf = parse_automorphism(args.at(0));
      for (std::size_t i = 1; i < args.size(); ++i) {
        nf = compose_nf(nf, parse_automorphism(args[i]));
      }
      if (invert) nf = invert_nf(nf);
      const std::string value = to_text(nf);
      ReportDocument doc;
      doc.command = name;
      doc.algebra = "w";
      doc.window = window;
      doc.add("normal_form", "", value, true);
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json, value);
    };
  };

  auto* aut_compose = aut->add_subcommand("compose", "compose automorphisms (rightmost applied first)");
  aut_compose->add_option("args", args, "automorphism strings or generator tokens")
      ->expected(-1)->required();
  add_common(aut_compose, false, false);
  aut_compose->callback([&] { action = make_word_action("aut compose", false); });

  auto* aut_nf = aut->add_subcommand("normal-form", "normal form of a generator word");
  aut_nf->add_option("args", args, "generator tokens")->expected(-1)->required();
  add_common(aut_nf, false, false);
  aut_nf->callback([&] { action = make_word_action("aut normal-form", false); });

  auto* aut_invert = aut->add_subcommand("invert", "normal form of the inverse");
  aut_invert->add_option("args", args, "automorphism string or generator tokens")
      ->expected(-1)->required();
  add_common(aut_invert, false, false);
  aut_invert->callback([&] { action = make_word_action("aut invert", true); });

  auto* aut_verify = aut->add_subcommand("verify", "certify the homomorphism property");
  aut_verify->add_option("args", args, "automorphism string")->expected(1);
  add_common(aut_verify, true, false);
  aut_verify->callback([&] {
    action = [&]() -> int {
      const auto start = std::chrono::steady_clock::now();
      const AutomorphismNF f = parse_automorphism(args[0]);
      const AlgebraKind kind = algebra.empty() ? AlgebraKind::w : parse_algebra(algebra);
      VerifyAutReport r = verify_automorphism(f, kind, Window(window));
      ReportDocument doc;
      doc.command = "aut verify";
      doc.algebra = std::string(algebra_name(kind));
      doc.window = window;
      doc.add("pairs_checked", "", std::to_string(r.pairs_checked), true);
      doc.add("pairs_skipped", "", std::to_string(r.pairs_skipped), true);
      doc.add("bracket-preserved", "f([x,y]) = [f(x), f(y)] on every window pair",
              r.first_violation
                  ? "violation at (" + symbol_name(r.first_violation->first, kind) + ", " +
                        symbol_name(r.first_violation->second, kind) + ")"
                  : "all pairs pass",
              !r.first_violation.has_value());
      if (kind == AlgebraKind::wtilde) {
        std::string central = "none";
        if (r.central) {
          central = "C1 -> " + r.central->c[0][0].str() + "*C1 + " +
                    r.central->c[0][1].str() + "*C2, C2 -> " + r.central->c[1][0].str() +
                    "*C1 + " + r.central->c[1][1].str() + "*C2" +
                    (r.central_unique ? " (unique)" : " (not unique)");
        }
        doc.add("central-assignment", "admissible central images of the lift", central,
                r.central.has_value());
      }
      doc.elapsed_ms = elapsed_ms(start);
      return emit(doc, json);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
