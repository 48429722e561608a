#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <sys/wait.h>

#include "skein/expr.hpp"
#include "skein/statedtorus.hpp"
#include "skein/suites.hpp"

using namespace skein;

namespace {

std::string canon(const std::string& s) { return render_expression(parse_expression(s)); }

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SKEINALG_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

// Random expression text over the given atoms.
std::string random_expr(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 1);
  std::uniform_int_distribution<int> atom(0, static_cast<int>(atoms.size()) - 1), small(-2, 3);
  switch (pick(rng)) {
    case 0: return atoms[atom(rng)];
    case 1: return std::to_string(small(rng) + 2);
    case 2: return random_expr(rng, atoms, depth - 1) + " + " + random_expr(rng, atoms, depth - 1);
    case 3: return random_expr(rng, atoms, depth - 1) + " - " + random_expr(rng, atoms, depth - 1);
    case 4: return "(" + random_expr(rng, atoms, depth - 1) + ")*" + random_expr(rng, atoms, depth - 1);
    case 5: return "(" + random_expr(rng, atoms, depth - 1) + ")^" + std::to_string(small(rng) + 2);
    case 6: return "[" + random_expr(rng, atoms, depth - 1) + ", " + random_expr(rng, atoms, depth - 1) + "]_q";
    default: return "q^(" + std::to_string(small(rng)) + "/2)*" + random_expr(rng, atoms, depth - 1);
  }
}

}  // namespace

TEST_CASE("parser node shapes") {
  auto e = parse_expression("q^(1/2)*x1");
  CHECK(e->kind == ExprNode::Kind::Product);
  CHECK(e->kids[0]->kind == ExprNode::Kind::Power);
  CHECK(e->kids[0]->exp_den == 2);
  CHECK(parse_expression("[Y1, Y3]_q")->kind == ExprNode::Kind::Bracket);
  auto t = parse_expression("T X T");
  REQUIRE(t->kind == ExprNode::Kind::Product);
  CHECK(t->kids.size() == 3);
  CHECK(parse_expression("[a, b]_{q^-1}")->dir == -1);
  CHECK(parse_expression("v(+,-)")->name == "v(+,-)");
}

TEST_CASE("canonical rendering") {
  CHECK(canon("q^(1/2)*x1") == "q^(1/2)*x1");
  CHECK(canon("T X T") == "T*X*T");
  CHECK(canon("X^-1 Y") == "X^(-1)*Y");
  CHECK(canon("q^(2/2)") == "q^1");
  CHECK(canon("a - (b + c)") == "a - (b + c)");
  CHECK(canon("-a*-b") == "-a*(-b)");
  CHECK(canon("[x, y]_{q^-1}") == "[x, y]_{q^-1}");
  CHECK(canon("(a/b)/c") == "a/b/c");
  CHECK(canon("a/(b*c)") == "a/(b*c)");
}

TEST_CASE("parse after render is the identity on canonical renderings") {
  std::mt19937 rng(4);
  for (int i = 0; i < 300; ++i) {
    std::string src = random_expr(rng, {"X", "Y", "T", "q", "t", "x1"}, 3);
    std::string r = canon(src);
    CHECK(canon(r) == r);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_expression("X + * Y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_expression("[X, Y]"), ParseError);
  CHECK_THROWS_AS(parse_expression("X^(1/3)"), ParseError);
  CHECK_THROWS_AS(parse_expression("(X"), ParseError);
  CHECK_THROWS_AS(parse_expression("X $ Y"), ParseError);
}

TEST_CASE("evaluation in each algebra") {
  CHECK(eval_daha(parse_expression("T X T")) == daha::X(-1));
  CHECK(eval_daha(parse_expression("e e - e")).is_zero());
  CHECK(eval_rank2(parse_expression("X Y - q^2 Y X")).is_zero());
  CHECK(eval_torus6(parse_expression("[X1_0, y2]_q/(q^2 - q^(-2))")) == EmbeddingContext::get().X3_0_pp);
  CHECK(eval_torus6(parse_expression("[y1, y2]_q - (q^2 - q^(-2)) y3")).is_zero());
  CHECK(eval_v(parse_expression("v(-,-) v(-,+)")) == QScalar::q(4) * VElement::monomial({0, 0, 1, 1}));
  CHECK(eval_v(parse_expression("vmm vmp")) == eval_v(parse_expression("v(-,-)*v(-,+)")));
  CHECK(eval_laurent(parse_expression("x^-1 x")) == LaurentPoly::constant(4, 1));
  CHECK(eval_scalar(parse_expression("(q^4 - q^(-4))/(q^2 - q^(-2))")) ==
        QFraction(QScalar::q(2) + QScalar::q(-2)));
  CHECK(eval_scalar(parse_expression("q^(1/2) q^(1/2)")) == QFraction(QScalar::q(1)));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval_rank2(parse_expression("Z")), UnknownSymbolError);
  CHECK_THROWS_AS(eval_daha(parse_expression("x1")), UnknownSymbolError);
  CHECK_THROWS_AS(eval_rank2(parse_expression("X/Y")), std::invalid_argument);
  CHECK_THROWS_AS(eval_rank2(parse_expression("X/(q - 1)")), DivisionError);
  CHECK_THROWS_AS(eval_rank2(parse_expression("X^(1/2)")), std::invalid_argument);
  CHECK_THROWS_AS(eval_v(parse_expression("vpp^-1")), std::invalid_argument);
  CHECK_THROWS_AS(eval_scalar(parse_expression("1/(q - q)")), DivisionError);
}

TEST_CASE("DAHA normal forms parse back to themselves") {
  for (const char* src : {"T T", "Y X", "T Y", "e", "X Y^-1 T X"}) {
    DahaElement a = eval_daha(parse_expression(src));
    CHECK(eval_daha(parse_expression(a.str())) == a);
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 6);
  CHECK_THROWS_AS(suite_checks("nope"), UnknownSuiteError);
  std::size_t total = 0;
  for (const auto& n : suite_names())
    if (n != "all") total += suite_checks(n).size();
  CHECK(suite_checks("all").size() == total);
}

TEST_CASE("serial and parallel runs give identical reports") {
  VerificationReport a = run_suite("curves", Execution::serial);
  VerificationReport b = run_suite("curves", Execution::parallel);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(run_suite("daha").to_json(false) == run_suite("daha").to_json(false));
}

TEST_CASE("command line: subcommands") {
  CHECK(run_cli("normalize \"T X T\"").out == "X^-1\n");
  CHECK(run_cli("mul \"X Y\"").out == "context: A_q\nresult: X*Y\n");
  CHECK(run_cli("vmul \"v(-,-) v(-,+)\"").out == "q^4*v(-,+)*v(-,-)\n");
  CHECK(run_cli("act x6 \"x*y*z*w\"").out == "q^16*x*y*z*w\n");
  CHECK(run_cli("embed X1_0").out == "q^(1/2)*x1\n");
  Run c = run_cli("curve 2 1");
  CHECK(c.status == 0);
  CHECK(c.out.find("word: 1/(q^2 - q^(-2)) [Y1, Y3]_q") != std::string::npos);
  CHECK(run_cli("normalize \"X +\"").status == 2);
  CHECK(run_cli("mul \"Z\"").status == 2);
  CHECK(run_cli("verify nope").status != 0);
}

TEST_CASE("command line: verify exit codes and JSON schema") {
  Run daha = run_cli("verify daha --json");
  CHECK(daha.status == 0);
  auto j = nlohmann::json::parse(daha.out);
  CHECK(j["suite"] == "daha");
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("residual"));
  }
  Run curves = run_cli("verify curves --json");
  CHECK(curves.status == 1);
  auto k = nlohmann::json::parse(curves.out);
  bool saw_fail = false;
  for (const auto& c : k["checks"])
    if (!c["pass"].get<bool>()) saw_fail = true;
  CHECK(saw_fail);
}
