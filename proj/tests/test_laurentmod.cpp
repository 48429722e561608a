#include <doctest.h>

#include <random>

#include "skein/laurentmod.hpp"
#include "skein/statedtorus.hpp"

using namespace skein;

namespace {

LaurentPoly mono(IntVec e, const QScalar& c = QScalar(1)) { return LaurentPoly::monomial(std::move(e), c); }
LaurentPoly one() { return LaurentPoly::constant(4, 1); }
const EmbeddingContext& E() { return EmbeddingContext::get(); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-2, 2), c(-3, 3), q2(-4, 4);
  LaurentPoly f(4);
  for (int i = 0; i < 3; ++i) f.add_term({ex(rng), ex(rng), ex(rng), ex(rng)}, QScalar::monomial(c(rng), q2(rng), 0));
  return f;
}

TorusElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-1, 1), c(1, 3), q2(-3, 3);
  TorusElement a(E().torus6);
  for (int i = 0; i < 2; ++i) {
    Monomial u(6);
    for (auto& x : u) x = ex(rng);
    a.add_term(u, QScalar::monomial(c(rng), q2(rng), 0));
  }
  return a;
}

}  // namespace

TEST_CASE("Laurent polynomials render with x, y, z, w") {
  CHECK(mono({1, -2, 0, 1}, QScalar::q(3)).str() == "q^3*x*y^-2*w");
  CHECK(one().str() == "1");
  CHECK(LaurentPoly(6).variable_names() == std::vector<std::string>{"y1", "y2", "y3", "y4", "y5", "y6"});
}

TEST_CASE("generator actions, frozen") {
  LaurentPoly f = mono({1, -2, 0, 1}, QScalar::q(3)) + mono({0, 1, 1, -1}, 2);
  CHECK(generator_action(5, f) == f);
  CHECK(generator_action(1, one()) == mono({1, 0, 0, 0}));
  CHECK(generator_action(6, mono({1, 1, 1, 1})) == QScalar::q(16) * mono({1, 1, 1, 1}));
  // x1 f = x f(x, qy, qz, q^-1 w)
  CHECK(generator_action(1, mono({2, 1, 0, 0})) == QScalar::q(1) * mono({3, 1, 0, 0}));
  CHECK(generator_action(1, mono({0, 0, 1, 1})) == mono({1, 0, 1, 1}));
}

TEST_CASE("shift operators compose by adding shifts") {
  ShiftOperator a = ShiftOperator::with_q_shifts({1, 0, 0, 0}, {0, 1, 1, -1});
  ShiftOperator b = ShiftOperator::with_q_shifts({0, 1, 0, -1}, {2, 0, -1, 0});
  ShiftOperator ab = compose(a, b);
  CHECK(ab.multiplier == IntVec{1, 1, 0, -1});
  CHECK(ab.half_shift == IntVec{4, 2, 0, -2});
  std::mt19937 rng(8);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly f = random_poly(rng);
    CHECK(ab.apply(f) == a.apply(b.apply(f)));
    CHECK(a.inverse().apply(a.apply(f)) == f);
    CHECK(a.pow(3).apply(f) == a.apply(a.apply(a.apply(f))));
    CHECK(a.pow(-2).apply(a.pow(2).apply(f)) == f);
  }
  CHECK(compose(a, ShiftOperator::identity(4)) == a);
}

TEST_CASE("printed actions at f = 1") {
  CHECK(element_action(E().y2, one()) == mono({1, 0, -1, 0}) + mono({-1, 0, 1, 0}) + mono({-1, 1, -1, 1}));
  LaurentPoly b = element_action(E().boundary, one());
  CHECK(b.size() == 9);
  CHECK(b.str() ==
        "x^-1*y^-1*z + x^-1*z^-1*w + x^-1*z*w^-1 + x^-1*y*z^-1 + y^-1*w^-1 + y^-1*w + y*w^-1 + "
        "x*y^-1*z^-1 + x*z^-1*w^-1");
  CHECK(apply_sum(printed_action("boundary"), one()) == b);
  CHECK_THROWS(printed_action("y7"));
}

TEST_CASE("printed actions agree with the module action on [-2,2]^4") {
  for (const char* name : {"y1", "y2", "y3", "boundary"}) {
    CAPTURE(name);
    int bad = 0;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c)
          for (int d = -2; d <= 2; ++d) {
            LaurentPoly f = mono({a, b, c, d});
            if (!(apply_sum(printed_action(name), f) == element_action(E().named(name), f))) ++bad;
          }
    CHECK(bad == 0);
  }
}

TEST_CASE("torus relations and module law") {
  std::mt19937 rng(21);
  const auto& Q = E().torus6->matrix();
  for (int t = 0; t < 10; ++t) {
    LaurentPoly f = random_poly(rng);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        CHECK(generator_action(i, generator_action(j, f)) ==
              QScalar::q(Q(i - 1, j - 1)) * generator_action(j, generator_action(i, f)));
  }
  for (int t = 0; t < 30; ++t) {
    TorusElement a = random_element(rng), b = random_element(rng);
    LaurentPoly f = random_poly(rng);
    CHECK(element_action(a * b, f) == element_action(a, element_action(b, f)));
  }
}

TEST_CASE("lattice membership") {
  const Lattice& L = boundary_subspace_lattice();
  CHECK(L.rank() == 4);
  CHECK(L.contains({-1, -1, 1, 0}));
  auto c = L.coordinates({0, -1, 0, -1});  // 1/(yw)
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<mpz_class>{1, 0, 1, -1});
  CHECK_FALSE(L.contains({1, 0, 0, 0}));
  CHECK(L.contains({0, 0, 0, 0}));
  Lattice M(3, {{2, 0, 0}, {0, 3, 0}});
  CHECK(M.rank() == 2);
  CHECK(M.contains({4, -3, 0}));
  CHECK_FALSE(M.contains({1, 0, 0}));
  CHECK_FALSE(M.contains({0, 0, 1}));
  CHECK(y2_subspace_lattice().contains({-1, 1, -1, 1}));
}

TEST_CASE("the boundary preserves its subspace") {
  auto rep = check_invariant_subspace_boundary(one());
  CHECK(rep.image_in_subspace);
  CHECK(rep.outside.empty());
  CHECK(check_invariant_subspace_boundary(mono({0, -1, 0, 1})).image_in_subspace);
  CHECK_THROWS_AS(check_invariant_subspace_boundary(mono({1, 0, 0, 0})), PreconditionError);
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      IntVec k{a, b, 1, -1};
      IntVec e(4, 0);
      const auto& g = boundary_subspace_lattice().generators();
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e[j] += k[i] * g[i][j];
      CHECK(element_action(E().boundary, mono(e)) == boundary_subspace_formula(k));
    }
}

TEST_CASE("y2 preserves its rank-2 subspace") {
  CHECK(y2_subspace_formula(0, 0) == mono({-1, 0, 1, 0}) + mono({1, 0, -1, 0}) + mono({-1, 1, -1, 1}));
  for (int k1 = -2; k1 <= 2; ++k1)
    for (int k2 = -2; k2 <= 2; ++k2) {
      LaurentPoly f = mono({k1 - k2, k2, -k1 - k2, k2});
      auto rep = check_invariant_subspace_y2(f);
      CHECK(rep.image_in_subspace);
      CHECK(rep.image == y2_subspace_formula(k1, k2));
    }
  CHECK_THROWS_AS(check_invariant_subspace_y2(mono({0, 1, 0, 0})), PreconditionError);
}

TEST_CASE("the boundary has no monomial eigenvectors") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          LaurentPoly f = mono({a, b, c, d});
          LaurentPoly g = element_action(E().boundary, f);
          CHECK_FALSE((g.size() == 1 && g.terms().begin()->first == IntVec{a, b, c, d}));
        }
}

TEST_CASE("the general construction reproduces the instance") {
  // Reordering to x1, x2, x3, x4, x6, x5 puts the central generator last.
  const int perm[6] = {0, 1, 2, 3, 5, 4};
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rows[i][j] = E().torus6->matrix()(perm[i], perm[j]);
  auto ctx = std::make_shared<const TorusContext>(AntisymMatrix(rows),
                                                  std::vector<std::string>{"x1", "x2", "x3", "x4", "x6", "x5"});
  TorusModule m = proposition_module(ctx, 5);
  CHECK(m.nvars() == 4);
  for (int i = 0; i < 6; ++i) CHECK(m.generator(i) == printed_generator_actions()[perm[i]]);
  // In the original order x5 is central but sits among the first five.
  CHECK_THROWS_AS(proposition_module(E().torus6, 5), ContextError);
  CHECK_THROWS_AS(proposition_module(ctx, 4), ContextError);
}
