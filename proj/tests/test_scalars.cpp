#include <doctest.h>

#include <random>

#include "skein/scalars.hpp"

using namespace skein;

namespace {

QScalar random_scalar(std::mt19937& rng, bool integral_only = false, int max_terms = 4) {
  std::uniform_int_distribution<int> coef(-4, 4), q2(-6, 6), tp(-2, 2), n(1, max_terms);
  QScalar s;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    int e = q2(rng);
    if (integral_only) e &= ~1;
    s.add_term(coef(rng), e, tp(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("rendering follows q-exponent then t-exponent order") {
  QScalar s = QScalar::monomial(2, 0, 1) - QScalar::q_half(-5);
  CHECK(s.str() == "-q^(-5/2) + 2*t");
  CHECK(QScalar().str() == "0");
  CHECK(QScalar(1).str() == "1");
  CHECK(QScalar::q(2).str() == "q^2");
  CHECK(QScalar::q_half(1).str() == "q^(1/2)");
}

TEST_CASE("parse inverts str") {
  for (const char* src : {"-q^(-5/2) + 2*t", "-q^(-2) + q^2", "3/2*q*t^(-1)", "1", "0"}) {
    CHECK(QScalar::parse(src).str() == src);
  }
  CHECK(QScalar::parse("q^(1/2)*q^(1/2)") == QScalar::q(1));
  CHECK_THROWS_AS(QScalar::parse("q^"), ParseError);
  CHECK_THROWS_AS(QScalar::parse("z"), ParseError);
}

TEST_CASE("half powers of q") {
  CHECK(QScalar::q_half(1) * QScalar::q_half(1) == QScalar::q(1));
  CHECK(QScalar::q_half(3).monomial_inverse() == QScalar::q_half(-3));
  CHECK_FALSE((QScalar::q(1) + 1).monomial_inverse().has_value());
  CHECK(qdiff() == QScalar::q(2) - QScalar::q(-2));
}

TEST_CASE("exact division") {
  QScalar a = QScalar::q(4) - QScalar::q(-4);
  auto r = exact_divide(a, qdiff());
  REQUIRE(r.has_value());
  CHECK(*r == QScalar::q(2) + QScalar::q(-2));
  CHECK_FALSE(exact_divide(QScalar::q(2), qdiff()).has_value());
  CHECK_THROWS_AS(divide_or_throw(QScalar(1), QScalar::q(1) + 1), DivisionError);
  CHECK_THROWS_AS(divide_or_throw(QScalar(1), QScalar()), DivisionError);
}

TEST_CASE("substitutions") {
  QScalar s = QScalar::t(1) + QScalar::t(-1);
  CHECK(s.subst_t(2) == QScalar::q(1) + QScalar::q(-1));
  CHECK(s.subst_t(0) == QScalar(2));
  CHECK(qdiff().subst_q_one().is_zero());
  CHECK(QScalar::q_half(3).invert_q() == QScalar::q_half(-3));
}

TEST_CASE("fractions are stored in canonical reduced form") {
  QFraction f(qdiff(), QScalar::q(4) - QScalar::q(-4));
  CHECK(f == QFraction(QScalar(1), QScalar::q(2) + QScalar::q(-2)));
  CHECK(f.den().min_exponents() == QScalar::Key{0, 0});
  QFraction g(QScalar::t(1) + QScalar::t(-1), QScalar::t(1) + QScalar::t(-1));
  CHECK(g.is_polynomial());
  CHECK(g == QFraction(1));
  CHECK_THROWS_AS(QFraction(QScalar(1), QScalar()), DivisionError);
  QFraction h = QFraction(1) / QFraction(QScalar::t(1) + QScalar::t(-1));
  CHECK(h * QFraction(QScalar::t(1) + QScalar::t(-1)) == QFraction(1));
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(101);
  for (int i = 0; i < 200; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QScalar());
  }
}

TEST_CASE("integer-exponent scalars stay integral under multiplication") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    QScalar a = random_scalar(rng, true), b = random_scalar(rng, true);
    CHECK((a * b).integral_q());
  }
}

TEST_CASE("cross-multiplied equality agrees with canonical equality") {
  std::mt19937 rng(55);
  for (int i = 0; i < 100; ++i) {
    QScalar n = random_scalar(rng), d = random_scalar(rng), k = random_scalar(rng);
    if (d.is_zero() || k.is_zero()) continue;
    QFraction a(n, d), b(n * k, d * k);
    CHECK(a == b);
    CHECK(cross_equal(a, b));
    QFraction c(n + QScalar(1), d);
    CHECK((a == c) == cross_equal(a, c));
  }
}

TEST_CASE("fraction field axioms") {
  std::mt19937 rng(9);
  for (int i = 0; i < 60; ++i) {
    QScalar n1 = random_scalar(rng, false, 2), d1 = random_scalar(rng, false, 2);
    QScalar n2 = random_scalar(rng, false, 2), d2 = random_scalar(rng, false, 2);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    QFraction a(n1, d1), b(n2, d2);
    CHECK((a / b) * b == a);
    CHECK(a + b - b == a);
  }
}
