#include <doctest.h>

#include <random>

#include "skein/solidtorus.hpp"

using namespace skein;

namespace {

VElement v(int g) { return VElement::generator(g); }
VElement mono(int a, int b, int c, int d, const QScalar& k = QScalar(1)) { return VElement::monomial({a, b, c, d}, k); }
const QScalar C = qdiff();

}  // namespace

TEST_CASE("rendering and constants") {
  CHECK(v(VPM).str() == "v(+,-)");
  CHECK(mono(2, 0, 0, 1, QScalar::q(2)).str() == "q^2*v(+,+)^2*v(-,-)");
  CHECK(vgen_name(VMP) == "v(-,+)");
  CHECK(state_constant(VPP).is_zero());
  CHECK(state_constant(VPM) == -QScalar::q_half(-5));
  CHECK(state_constant(VMP) == QScalar::q_half(-1));
  CHECK(state_constant(VMM).is_zero());
  CHECK(core_curve() == QScalar::q_half(1) * v(VPM) - QScalar::q_half(5) * v(VMP));
  CHECK(v_mul(core_curve(), VElement(QScalar(1))) == core_curve());
}

TEST_CASE("the six relations as products, frozen") {
  CHECK(v_mul(v(VMM), v(VMP)) == QScalar::q(4) * mono(0, 0, 1, 1));
  CHECK(v_mul(v(VMP), v(VPM)) == mono(0, 1, 1, 0));
  CHECK(v_mul(v(VPM), v(VMP)) == mono(0, 1, 1, 0));
  CHECK(v_mul(v(VMM), v(VPP)) == QScalar::q(8) * mono(1, 0, 0, 1) + (QScalar::q(8) * C) * mono(0, 0, 2, 0) -
                                     (QScalar::q(6) * C) * mono(0, 1, 1, 0) -
                                     VElement(QScalar::q(5) * (QScalar::q(4) - QScalar::q(-4))));
  CHECK(v_mul(v(VMP), v(VPP)) == QScalar::q(4) * mono(1, 0, 1, 0));
  CHECK(v_mul(v(VPM), v(VPP)) == mono(1, 1, 0, 0) + (QScalar::q(4) * C) * mono(1, 0, 1, 0));
  // The (-,-)(+,-) rule carries a (-,-)(-,+) correction that is itself reordered.
  CHECK(v_mul(v(VMM), v(VPM)) == mono(0, 1, 0, 1) + (QScalar::q(8) * C) * mono(0, 0, 1, 1));
}

TEST_CASE("ordered words are fixed points") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          VMonomial m{a, b, c, d};
          CHECK(v_normal_form(monomial_word(m)) == VElement::monomial(m));
        }
}

TEST_CASE("rules reduce each out-of-order pair") {
  CHECK(v_rules().size() == 6);
  for (const auto& r : v_rules()) {
    CHECK(r.left > r.right);
    VElement nf = v_normal_form({r.left, r.right});
    for (const auto& [m, c] : nf.terms()) CHECK(v_normal_form(monomial_word(m)) == VElement::monomial(m));
  }
}

TEST_CASE("degree-3 associativity fails on exactly one generator triple") {
  int bad = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (!(v_mul(v_mul(v(a), v(b)), v(c)) == v_mul(v(a), v_mul(v(b), v(c))))) {
          ++bad;
          CHECK(a == VMM);
          CHECK(b == VPM);
          CHECK(c == VPP);
        }
  CHECK(bad == 1);
}

TEST_CASE("the word normal form is the leftmost-first rewrite") {
  VElement w = v_normal_form({VMM, VPM, VPP});
  CHECK(w == v_mul(v_mul(v(VMM), v(VPM)), v(VPP)));
}

TEST_CASE("the action table, frozen") {
  using namespace action_table;
  CHECK(x1(VPP, v(VMM)) == mono(1, 0, 0, 1));
  CHECK(x2_on_one(VPM) == VElement(-QScalar::q_half(-5)));
  CHECK(x3_on_one(VMP) == -QScalar::q(-3) * v(VMP));
  CHECK(y2_on_one() == VElement(-QScalar::q(2) - QScalar::q(-2)));
  CHECK(y2_on_generator(VPP) == (-QScalar::q(4) - QScalar::q(-4)) * v(VPP));
  CHECK(y3_on_one() == -QScalar::q(-3) * core_curve());
  CHECK(boundary_on_generator(VPP) == (-QScalar::q(6) - QScalar::q(-6)) * v(VPP));
  CHECK(x2_example() == (QScalar::q_half(-5) * C) * v(VMM));
}

TEST_CASE("determined identities") {
  using namespace action_table;
  // Y2 1 through the trivial-arc constants.
  CHECK(QScalar::q_half(1) * state_constant(VPM) - QScalar::q_half(5) * state_constant(VMP) ==
        -QScalar::q(2) - QScalar::q(-2));
  // Y3 1 through X3 1.
  CHECK(QScalar::q_half(1) * x3_on_one(VPM) - QScalar::q_half(5) * x3_on_one(VMP) == y3_on_one());
  // X3 1 through [X1, Y2]_q / (q^2 - q^-2).
  for (int g = 0; g < 4; ++g) {
    VElement br = QScalar::q(1) * x1(g, y2_on_one()) - QScalar::q(-1) * y2_on_generator(g);
    auto d = br.divide_exact(C);
    REQUIRE(d.has_value());
    CHECK(*d == x3_on_one(g));
  }
}

TEST_CASE("the consistency solver re-derives the stated example") {
  ConsistencyResult r = relation_action_consistency();
  CHECK(r.unknowns.size() == 25);
  CHECK(r.contradictions.empty());
  auto ex = r.value(x2_unknown_name(VMM, VPM));
  REQUIRE(ex.has_value());
  CHECK(*ex == action_table::x2_example());
  CHECK(x2_unknown_name(VMM, VPM) == "X2(-,-) v(+,-)");
  CHECK_FALSE(r.derived_from[4 * VMM + VPM].empty());
}

TEST_CASE("products of random words in v(+,+), v(+,-), v(-,+) are associative") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> g(0, 2), len(1, 2);
  auto word = [&] {
    VElement a = v(g(rng));
    for (int k = len(rng); k > 1; --k) a = v_mul(a, v(g(rng)));
    return a;
  };
  for (int i = 0; i < 150; ++i) {
    VElement a = word(), b = word(), c = word();
    CHECK(v_mul(v_mul(a, b), c) == v_mul(a, v_mul(b, c)));
  }
}
