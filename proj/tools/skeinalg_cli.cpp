// skeinalg: normal forms, products and verification suites from the shell.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "skein/expr.hpp"
#include "skein/laurentmod.hpp"
#include "skein/statedtorus.hpp"
#include "skein/suites.hpp"
#include "skein/toruscurves.hpp"

using namespace skein;

namespace {

bool g_json = false;

void emit(const std::string& input, const std::vector<std::pair<std::string, std::string>>& fields) {
  if (g_json) {
    nlohmann::ordered_json j;
    j["input"] = input;
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (fields.size() == 1) {
    std::cout << fields[0].second << "\n";
    return;
  }
  for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
}

// Torus products: X, Y resolve in A_q; anything else is looked up in T^6.
TorusElement eval_torus(const NodePtr& e, std::string& context) {
  try {
    context = "A_q";
    return eval_rank2(e);
  } catch (const UnknownSymbolError&) {
    context = "T^6";
    return eval_torus6(e);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for skein algebras of the torus and their quantum torus models"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");

  std::string expr, second;
  int p = 0, q = 0;
  std::string suite;
  bool serial = false;

  auto* normalize = app.add_subcommand("normalize", "PBW normal form of a DAHA word in X, Y, T, e, q, t");
  normalize->add_option("expr", expr)->required();
  auto* mul = app.add_subcommand("mul", "normal-ordered product in A_q (X, Y) or T^6 (x1..x6)");
  mul->add_option("expr", expr)->required();
  auto* embed = app.add_subcommand("embed", "image in T^6 of an expression in y1, y2, y3, boundary, X1_0, ...");
  embed->add_option("expr", expr)->required();
  auto* act = app.add_subcommand("act", "action of a T^6 element on a Laurent polynomial in x, y, z, w");
  act->add_option("torus", expr)->required();
  act->add_option("laurent", second)->required();
  auto* curve = app.add_subcommand("curve", "bracket word and value of the (p,q) curve");
  curve->add_option("p", p)->required();
  curve->add_option("q", q)->required();
  auto* vmul = app.add_subcommand("vmul", "ordered normal form of a word in v(+,+), v(+,-), v(-,+), v(-,-)");
  vmul->add_option("expr", expr)->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_flag("--serial", serial, "run checks one at a time");
  for (auto* sub : {normalize, mul, embed, act, curve, vmul, verify})
    sub->add_flag("--json", g_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*normalize) {
      emit(expr, {{"result", eval_daha(parse_expression(expr)).str()}});
    } else if (*mul) {
      std::string context;
      TorusElement r = eval_torus(parse_expression(expr), context);
      emit(expr, {{"context", context}, {"result", r.str()}});
    } else if (*embed) {
      emit(expr, {{"result", eval_torus6(parse_expression(expr)).str()}});
    } else if (*act) {
      TorusElement a = eval_torus6(parse_expression(expr));
      LaurentPoly f = eval_laurent(parse_expression(second));
      emit(expr + " . " + second, {{"result", element_action(a, f).str()}});
    } else if (*curve) {
      ExprPtr w = curve_expression(p, q);
      TorusElement v = evaluate_curve_expression(w, standard_curve_assignment());
      emit("(" + std::to_string(p) + "," + std::to_string(q) + ")",
           {{"word", w->normalized_str()}, {"tangle word", tangle_expression(p, q)->normalized_str()},
            {"value", v.str()}});
    } else if (*vmul) {
      emit(expr, {{"result", eval_v(parse_expression(expr)).str()}});
    } else if (*verify) {
      VerificationReport r = run_suite(suite, serial ? Execution::serial : Execution::parallel);
      std::cout << (g_json ? r.to_json() + "\n" : r.to_text());
      return r.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
