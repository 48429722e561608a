#include <doctest.h>

#include <random>

#include "skein/daha.hpp"

using namespace skein;
using namespace skein::daha;

namespace {

const QScalar c_t = QScalar::t(1) - QScalar::t(-1);

DahaElement scalar(const QScalar& s) { return DahaElement(QFraction(s)); }

DahaElement combo(const PbwCombo& c) { return DahaElement::from_combo(c); }

DahaElement random_monomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> pw(-3, 3), ep(0, 1);
  return DahaElement::monomial({pw(rng), ep(rng), pw(rng)});
}

}  // namespace

TEST_CASE("quadratic relation") {
  CHECK(T() * T() == scalar(1) + scalar(c_t) * T());
  CHECK((T() * T()).str() == "1 + (-t^(-1) + t)*T");
}

TEST_CASE("defining relations normalize to zero") {
  CHECK((T() * X() * T() - X(-1)).is_zero());
  CHECK((T() * Y(-1) * T() - Y()).is_zero());
  CHECK((X() * Y() - scalar(QScalar::q(2)) * (Y() * X() * T() * T())).is_zero());
  CHECK(((T() - scalar(QScalar::t(1))) * (T() + scalar(QScalar::t(-1)))).is_zero());
}

TEST_CASE("single rewrite steps match the relations") {
  // T X = X^-1 T^-1 and Y T = T^-1 Y^-1 follow from TXT = X^-1 and TY^-1T = Y.
  CHECK(combo(rule_T_Xpow(1)) == X(-1) * T() - scalar(c_t) * X(-1));
  CHECK(combo(rule_T_Xpow(-1)) == X() * T() + scalar(c_t) * X(-1));
  CHECK(combo(rule_Ypow_T(1)) == T() * Y(-1) + scalar(c_t) * Y());
  CHECK(combo(rule_Ypow_T(-1)) == T() * Y() - scalar(c_t) * Y());
  for (int a = -3; a <= 3; ++a) CHECK(combo(rule_T_Xpow(a)) == T() * X(a));
  for (int m = -3; m <= 3; ++m) CHECK(combo(rule_Ypow_T(m)) == Y(m) * T());
  for (int m = -3; m <= 3; ++m)
    for (int s : {-1, 1}) CHECK(combo(rule_Ypow_X(m, s)) == Y(m) * X(s));
}

TEST_CASE("Y X from the cross relation") {
  // X Y = q^2 Y X T^2 gives Y X = q^-2 X Y T^-2.
  CHECK(Y() * X() == scalar(QScalar::q(-2)) * (X() * Y() * T_pow(-2)));
}

TEST_CASE("inverse of T") {
  CHECK(inv_T() == T() + scalar(QScalar::t(-1) - QScalar::t(1)));
  CHECK(inv_T() * T() == scalar(1));
  CHECK(T() * inv_T() == scalar(1));
  CHECK(inv_T().subst_t(0) == T());
  CHECK(T_pow(3) * T_pow(-3) == scalar(1));
  CHECK(T_pow(0) == scalar(1));
}

TEST_CASE("PBW words render in normal order") {
  CHECK((X(2) * T() * Y(-1)).str() == "X^2*T*Y^-1");
  CHECK(X(-1).str() == "X^-1");
  CHECK(DahaElement().str() == "0");
}

TEST_CASE("spherical idempotent") {
  DahaElement e = spherical_idempotent();
  CHECK(e * e == e);
  CHECK((scalar(1) - e) * e == DahaElement());
  CHECK(e.subst_t(0) == QFraction(QScalar(1), QScalar(2)) * (T() + scalar(1)));
  CHECK(T() * e == scalar(QScalar::t(1)) * e);
}

TEST_CASE("associativity on 240 random PBW monomial triples") {
  std::mt19937 rng(77);
  for (int i = 0; i < 240; ++i) {
    DahaElement a = random_monomial(rng), b = random_monomial(rng), c = random_monomial(rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("memoized products agree under concurrent use") {
  std::mt19937 rng(78);
  std::vector<std::pair<PbwKey, PbwKey>> pairs;
  std::uniform_int_distribution<int> pw(-4, 4), ep(0, 1);
  for (int i = 0; i < 200; ++i) pairs.push_back({{pw(rng), ep(rng), pw(rng)}, {pw(rng), ep(rng), pw(rng)}});
  std::vector<PbwCombo> parallel(pairs.size());
#pragma omp parallel for
  for (long i = 0; i < static_cast<long>(pairs.size()); ++i)
    parallel[i] = monomial_product(pairs[i].first, pairs[i].second);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    CHECK(parallel[i] == monomial_product(pairs[i].first, pairs[i].second));
  CHECK(memo_size() > 0);
}

TEST_CASE("Terwilliger images lie in eHe and satisfy the cyclic relations") {
  DahaElement e = spherical_idempotent();
  DahaElement x = terwilliger_image('x'), y = terwilliger_image('y'), z = terwilliger_image('z');
  for (const auto* a : {&x, &y, &z}) {
    CHECK(e * *a == *a);
    CHECK(*a * e == *a);
  }
  const QFraction C(qdiff());
  CHECK(q_commutator(x, y) == C * z);
  CHECK(q_commutator(y, z) == C * x);
  CHECK(q_commutator(z, x) == C * y);
  CHECK_THROWS_AS(terwilliger_image('w'), std::invalid_argument);
}

TEST_CASE("Casimir relation") {
  CHECK(casimir_check().is_zero());
  QScalar s = QScalar::q(1) + QScalar::q(-1);
  CHECK(casimir_value().subst_t(2) == QFraction(s * s));
  // At t = 1 the value is (q^-1 - q)^2 + (q + q^-1)^2 = 2q^2 + 2q^-2.
  CHECK(casimir_value().subst_t(0) == QFraction(QScalar(2) * (QScalar::q(2) + QScalar::q(-2))));
}

TEST_CASE("t = 1: conjugation by T inverts X and Y") {
  auto at1 = [](const DahaElement& a) { return a.subst_t(0); };
  CHECK(at1(T() * X() * inv_T()) == X(-1));
  CHECK(at1(T() * Y() * inv_T()) == at1(Y(-1)));
  DahaElement w = X() * Y() + Y() * X();
  DahaElement flipped = X(-1) * Y(-1) + Y(-1) * X(-1);
  CHECK(at1(T() * w * inv_T()) == at1(flipped));
  CHECK(at1(T() * (w + flipped) - (w + flipped) * T()).is_zero());
  // The word itself does not commute with T.
  CHECK_FALSE(at1(T() * w - w * T()).is_zero());
}
