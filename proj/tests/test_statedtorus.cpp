#include <doctest.h>

#include "skein/statedtorus.hpp"

using namespace skein;

namespace {

const EmbeddingContext& E() { return EmbeddingContext::get(); }
TorusElement x(int i, int n = 1) { return TorusElement::generator(E().torus6, i - 1, n); }

}  // namespace

TEST_CASE("the commutation matrix") {
  AntisymMatrix Q = stated_torus_matrix();
  CHECK(Q.n() == 6);
  CHECK(Q(0, 1) == 2);
  CHECK(Q(3, 1) == 4);
  CHECK(Q(5, 0) == 4);
  for (int j = 0; j < 6; ++j) CHECK(Q(4, j) == 0);  // x5 is central
}

TEST_CASE("images of the closed curves, frozen") {
  CHECK(E().y1.str() ==
        "q^(-1)*x2^-1*x3 + q^(-1)*x2*x3^-1 + q^2*x1*x2^-1*x4^-1*x5 + q*x1^2*x3^-1*x4^-1");
  CHECK(E().y2.str() == "q*x1^-1*x3 + q^(-1)*x1^-1*x2*x3^-1*x4 + q*x1*x3^-1");
  CHECK(E().y3.str() ==
        "q^(-1)*x1^-1*x2^-1*x3^2 + q^(-1)*x1^-1*x4 + x2^-1*x3*x4^-1*x5 + q^(-1)*x1*x4^-1");
  CHECK(E().boundary.size() == 9);
  CHECK(E().boundary.str() ==
        "q^(-1)*x1^-1*x2^-1*x3*x5 + q^(-3)*x1^-1*x3^-1*x4*x5 + q*x1^-1*x3*x4^-1*x5 + "
        "q^(-1)*x1^-1*x2*x3^-1*x5 + q^2*x2^-1*x4^-1*x5^2 + q^(-2)*x2^-1*x4 + q^(-2)*x2*x4^-1 + "
        "q^3*x1*x2^-1*x3^-1*x5 + q*x1*x3^-1*x4^-1*x5");
}

TEST_CASE("named constants") {
  CHECK(E().named("X1_0") == QScalar::q_half(1) * x(1));
  CHECK(E().named("arc") == QScalar::q_half(1) * x(5));
  CHECK(E().named("x4") == x(4));
  CHECK(E().named("y2") == E().y2);
  CHECK_THROWS_AS(E().named("nope"), ContextError);
  CHECK(EmbeddingContext::names().size() >= 10);
}

TEST_CASE("cyclic q-commutators of y1, y2, y3") {
  CHECK(q_commutator(E().y1, E().y2) == qdiff() * E().y3);
  CHECK(q_commutator(E().y2, E().y3) == qdiff() * E().y1);
  CHECK(q_commutator(E().y3, E().y1) == qdiff() * E().y2);
}

TEST_CASE("boundary formula and centrality") {
  CHECK(boundary_from_curves(E().y1, E().y2, E().y3) == E().boundary);
  for (const auto* y : {&E().y1, &E().y2, &E().y3}) CHECK(E().boundary * *y == *y * E().boundary);
  // x5 is central, so the boundary arc commutes with everything.
  for (int i = 1; i <= 6; ++i) CHECK(E().boundary_arc_pp * x(i) == x(i) * E().boundary_arc_pp);
}

TEST_CASE("X3 from the X1, y2 commutator") {
  CHECK(x3_commutator_residual().is_zero());
  CHECK(q_commutator(E().X1_0_pp, E().y2).divide_exact(qdiff()) == E().X3_0_pp);
}

TEST_CASE("twist shifts, frozen") {
  CHECK(twist_shift_up(E().X1_0_pp) == E().X1_half_pp);
  CHECK(twist_shift_down(E().X1_0_pp) == E().X1_minushalf_pp);
  CHECK(twist_shift_down(twist_shift_up(E().X1_0_pp)) == E().X1_0_pp);
  CHECK(twist_shift_up(twist_shift_down(E().X1_0_pp)) == E().X1_0_pp);
  // One full twist moves X_{1,-1/2} to X_{1,0}, not to X_{1,1/2}.
  CHECK(twist_shift_up(E().X1_minushalf_pp) == E().X1_0_pp);
  CHECK_FALSE(twist_shift_up(E().X1_minushalf_pp) == E().X1_half_pp);
  CHECK(twist_shift_up(twist_shift_up(E().X1_minushalf_pp)) == E().X1_half_pp);
}

TEST_CASE("twist shifts divide exactly along the orbit") {
  TorusElement a = E().X1_0_pp;
  for (int i = 0; i < 3; ++i) {
    TorusElement b = twist_shift_up(a);
    CHECK(twist_shift_down(b) == a);
    a = b;
  }
  CHECK_THROWS_AS(twist_shift_up(TorusElement(E().torus6, QScalar(1))), DivisionError);
}

TEST_CASE("the relation catalog") {
  const auto& cat = relation_catalog();
  REQUIRE(cat.size() == 16);
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].index == static_cast<int>(i + 1));
  CHECK(cat[0].str() == "X1[k](+,+) X2[k](+,+) = q^2 X2[k](+,+) X1[k](+,+)");
  CHECK(cat[10].str() == "X1[k](-,+) X2[k](-,+) = q^2 X2[k](-,+) X1[k](-,+)");
  CHECK(cat[0].verifiable_in_embedding);
  // The (+,+)(+,+) relation holds on the images.
  CHECK(E().X1_0_pp * E().X2_0_pp == QScalar::q(2) * (E().X2_0_pp * E().X1_0_pp));
}

TEST_CASE("state labels and symbols render compactly") {
  CHECK(StateLabel{1, -1}.str() == "(+,-)");
  CHECK(Sym{SymKind::X3tilde, {1, 1}, true}.str() == "X3~[k-1/2](+,+)");
}

TEST_CASE("embedding suite") {
  auto report = run_checks("embedding", embedding_checks());
  int failed = 0;
  for (const auto& c : report.checks)
    if (!c.pass && !c.exploratory) {
      ++failed;
      CHECK(c.id == "embedding.twist.up_minushalf_to_half");
    }
  CHECK(failed == 1);
  CHECK(verify_bp_in_embedding().passed());
  CHECK(verify_boundary_formula().passed());
}
