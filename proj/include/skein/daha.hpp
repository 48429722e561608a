// The A1 double affine Hecke algebra H_{q,t} in PBW form X^n T^eps Y^m.
//
// Defining relations: TXT = X^-1, TY^-1T = Y, XY = q^2 YXT^2,
// (T - t)(T + t^-1) = 0.
#pragma once

#include <compare>
#include <map>
#include <string>

#include "skein/scalars.hpp"

namespace skein {

struct PbwKey {
  int n = 0;    // power of X
  int eps = 0;  // power of T, 0 or 1
  int m = 0;    // power of Y
  friend auto operator<=>(const PbwKey&, const PbwKey&) = default;
  friend bool operator==(const PbwKey&, const PbwKey&) = default;
};

/// Polynomial-coefficient combination of PBW monomials.
using PbwCombo = std::map<PbwKey, QScalar>;

class DahaElement {
public:
  using Terms = std::map<PbwKey, QFraction>;

  DahaElement() = default;
  DahaElement(const QFraction& c);  // NOLINT(google-explicit-constructor)
  static DahaElement monomial(PbwKey k, const QFraction& c = QFraction(1));
  static DahaElement from_combo(const PbwCombo& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QFraction coeff(const PbwKey& k) const;
  void add_term(const PbwKey& k, const QFraction& c);

  DahaElement& operator+=(const DahaElement& o);
  DahaElement& operator-=(const DahaElement& o);
  DahaElement operator-() const;
  friend DahaElement operator+(DahaElement a, const DahaElement& b) { return a += b; }
  friend DahaElement operator-(DahaElement a, const DahaElement& b) { return a -= b; }
  friend DahaElement operator*(const DahaElement& a, const DahaElement& b);
  friend DahaElement operator*(const QFraction& c, const DahaElement& a);
  friend bool operator==(const DahaElement& a, const DahaElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DahaElement& a, const DahaElement& b) { return !(a == b); }

  DahaElement pow(int n) const;
  /// Substitutes t -> q^(q2_per_t/2) in every coefficient.
  DahaElement subst_t(int q2_per_t) const;

  std::string str() const;

private:
  Terms terms_;
};

namespace daha {

DahaElement X(int power = 1);
DahaElement Y(int power = 1);
DahaElement T();
/// T^-1 = T + t^-1 - t.
DahaElement inv_T();
/// T^k for any integer k.
DahaElement T_pow(int k);

/// Product of two PBW monomials, memoized and safe to call concurrently.
const PbwCombo& monomial_product(const PbwKey& a, const PbwKey& b);
/// Number of memoized monomial products.
std::size_t memo_size();

// Single rewrite steps, exposed for tests.
PbwCombo rule_T_Xpow(int a);    // T X^a
PbwCombo rule_Ypow_T(int m);    // Y^m T
PbwCombo rule_Ypow_X(int m, int s);  // Y^m X^s, s = +-1

/// e = (T + t^-1)/(t + t^-1).
DahaElement spherical_idempotent();

/// Images of x, y, z: (X+X^-1)e, (Y+Y^-1)e, q^-1(XYT^-2 + X^-1Y^-1)e.
DahaElement terwilliger_image(char gen);

/// ((t/q - q/t)^2 + (q + 1/q)^2) as a fraction.
QFraction casimir_value();

/// q^2 x^2 + q^-2 y^2 + q^2 z^2 - q xyz - casimir_value() e on the images.
DahaElement casimir_check();

/// q a b - q^-1 b a.
DahaElement q_commutator(const DahaElement& a, const DahaElement& b);

}  // namespace daha

}  // namespace skein
