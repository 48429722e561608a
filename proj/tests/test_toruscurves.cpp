#include <doctest.h>

#include <numeric>

#include "skein/toruscurves.hpp"

using namespace skein;

namespace {

TorusElement X(int n = 1) { return TorusElement::generator(rank2_torus(), 0, n); }
TorusElement Y(int n = 1) { return TorusElement::generator(rank2_torus(), 1, n); }

TorusElement evaluate(const ExprPtr& e) { return evaluate_curve_expression(e, standard_curve_assignment()); }

}  // namespace

TEST_CASE("Chebyshev recurrence") {
  CHECK(chebyshev(0) == std::vector<long long>{2});
  CHECK(chebyshev(1) == std::vector<long long>{0, 1});
  CHECK(chebyshev(2) == std::vector<long long>{-2, 0, 1});
  CHECK(chebyshev(5) == std::vector<long long>{0, 5, 0, -5, 0, 1});
  CHECK_THROWS_AS(chebyshev(-1), DomainError);
}

TEST_CASE("curve elements, frozen values") {
  CHECK(curve_element(1, 0) == X() + X(-1));
  CHECK(curve_element(2, 0) == X(2) + X(-2));
  CHECK(curve_element(1, 1) == QScalar::q(-1) * (X() * Y()) + QScalar::q(-1) * (X(-1) * Y(-1)));
  CHECK(curve_element(-1, -1) == curve_element(1, 1));
  CHECK(curve_element(5, 3).str() == "q^(-15)*X^-5*Y^-3 + q^(-15)*X^5*Y^3");
  CHECK_THROWS_AS(curve_element(0, 0), DomainError);
}

TEST_CASE("curve elements are flip invariant") {
  for (int m = -5; m <= 5; ++m)
    for (int l = -5; l <= 5; ++l)
      if (m != 0 || l != 0) CHECK(z2_flip(curve_element(m, l)) == curve_element(m, l));
}

TEST_CASE("the three generating curves satisfy the cyclic q-commutator relations") {
  TorusElement x = curve_element(1, 0), y = curve_element(0, 1), z = curve_element(1, 1);
  CHECK(q_commutator(x, y) == qdiff() * z);
  CHECK(q_commutator(y, z) == qdiff() * x);
  CHECK(q_commutator(z, x) == qdiff() * y);
}

TEST_CASE("Farey parents, frozen examples") {
  CHECK(farey_parents(5, 3) == std::make_pair(Vec2{3, 2}, Vec2{2, 1}));
  CHECK(farey_parents(3, 1) == std::make_pair(Vec2{2, 1}, Vec2{1, 0}));
  CHECK(farey_parents(2, 1) == std::make_pair(Vec2{1, 1}, Vec2{1, 0}));
  CHECK(farey_parents(5, -3) == std::make_pair(Vec2{3, -2}, Vec2{2, -1}));
  CHECK_THROWS_AS(farey_parents(1, 0), DomainError);
  CHECK_THROWS_AS(farey_parents(4, 2), DomainError);
  CHECK_THROWS_AS(farey_parents(-2, 1), DomainError);
}

TEST_CASE("Farey parents: sums, unimodularity and bounds") {
  for (int p = 2; p <= 30; ++p)
    for (int q = -30; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto [a, b] = farey_parents(p, q);
      CHECK(a.first + b.first == p);
      CHECK(a.second + b.second == q);
      CHECK(std::abs(a.first * b.second - a.second * b.first) == 1);
      CHECK(std::abs(a.first) + std::abs(a.second) >= std::abs(b.first) + std::abs(b.second));
      if (p >= 3 && q >= 0 && q < p) {
        CHECK(0 < b.first);
        CHECK(b.first < p);
      }
    }
}

TEST_CASE("bracket words, frozen renderings") {
  CHECK(curve_expression(1, 0)->str() == "Y1");
  CHECK(curve_expression(2, 1)->str() == "[Y1, Y3]_q");
  CHECK(curve_expression(5, 3)->str() == "-[-[Y3, [Y1, Y3]_q]_{q^-1}, [Y1, Y3]_q]_{q^-1}");
  CHECK(curve_expression(5, 3)->normalized_str() ==
        "1/(q^2 - q^(-2))^4 -[-[Y3, [Y1, Y3]_q]_{q^-1}, [Y1, Y3]_q]_{q^-1}");
  CHECK(tangle_expression(5, 3)->str() ==
        "-[-[Y3, [Y1, -[Y2, Y1]_{q^-1}]_q]_{q^-1}, [Y1, -[Y2, X]_{q^-1}]_q]_{q^-1}");
  CHECK(literal_word_5_3()->str() ==
        "-[[Y3, [Y1, [Y2, Y1]_{q^-1}]_q]_{q^-1}, [Y1, [Y2, X]_{q^-1}]_q]_q");
  CHECK_THROWS_AS(curve_expression(2, 2), DomainError);
  CHECK_THROWS_AS(curve_expression(0, 0), DomainError);
}

TEST_CASE("the (2,1) word is the one normalized bracket of Y1 and Y3") {
  TorusElement v = q_commutator(curve_element(1, 0), curve_element(1, 1)).divide_exact(qdiff());
  CHECK(v == curve_element(2, 1));
  CHECK(evaluate(curve_expression(2, 1)) == curve_element(2, 1));
}

TEST_CASE("closed and tangle words evaluate to the curve, coprime |p|,|q| <= 8") {
  for (int p = -8; p <= 8; ++p)
    for (int q = -8; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(evaluate(curve_expression(p, q)) == curve_element(p, q));
      CHECK(evaluate(tangle_expression(p, q)) == curve_element(p, q));
    }
}

TEST_CASE("the displayed (5,3) word differs from the curve only through its outer bracket") {
  ExprPtr lit = literal_word_5_3();
  CHECK(lit->brackets() == 6);
  CHECK_FALSE(evaluate(lit) == curve_element(5, 3));
  // Swapping the two outer operands repairs it; so does +[L, R]_{q^-1}, since
  // [a, b]_{q^-1} = -[b, a]_q.
  CHECK(evaluate(CommutatorExpr::make_node(lit->right, lit->left, 1, -1)) == curve_element(5, 3));
  CHECK(evaluate(CommutatorExpr::make_node(lit->left, lit->right, -1, 1)) == curve_element(5, 3));
}

TEST_CASE("unassigned leaves are reported") {
  CHECK_THROWS_AS(evaluate_curve_expression(curve_expression(2, 1), {}), DomainError);
}
