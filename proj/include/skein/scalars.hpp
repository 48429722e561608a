// Laurent polynomials in q^(1/2) and t with rational coefficients, and their
// fraction field.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace skein {

using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

class DivisionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Sparse Laurent polynomial sum c * q^(q2/2) * t^t.
///
/// Keys are (q2, t) where q2 is twice the power of q, so q^(1/2) has key (1, 0).
/// Zero coefficients are never stored.
class QScalar {
public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  QScalar() = default;
  QScalar(long v);  // NOLINT(google-explicit-constructor)
  QScalar(const Rational& v);  // NOLINT(google-explicit-constructor)

  static QScalar monomial(const Rational& c, int q2, int tpow);
  /// q^(half/2)
  static QScalar q_half(int half) { return monomial(1, half, 0); }
  static QScalar q(int power = 1) { return monomial(1, 2 * power, 0); }
  static QScalar t(int power = 1) { return monomial(1, 0, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of q^(q2/2) t^tpow.
  Rational coeff(int q2, int tpow) const;
  /// True when every q exponent is an integer power of q.
  bool integral_q() const;
  bool has_t() const;

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar operator-() const;
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  /// Adds c * q^(q2/2) t^tpow in place.
  void add_term(const Rational& c, int q2, int tpow);
  QScalar shifted(int dq2, int dt) const;

  /// Integer power; negative powers require a monomial.
  QScalar pow(int n) const;
  /// Inverse of a monomial; nullopt otherwise.
  std::optional<QScalar> monomial_inverse() const;

  /// Substitutes t -> q^(q2_per_t/2).
  QScalar subst_t(int q2_per_t) const;
  /// Substitutes q^(1/2) -> 1.
  QScalar subst_q_one() const;
  /// Substitutes q^(1/2) -> q^(-1/2).
  QScalar invert_q() const;

  /// Lexicographically largest key (q2 first, then t). Requires nonzero.
  Key leading_key() const { return terms_.rbegin()->first; }
  Key min_exponents() const;

  std::string str() const;
  static QScalar parse(std::string_view src);

private:
  Terms terms_;
};

/// Quotient a/b when it is a Laurent polynomial, nullopt otherwise.
std::optional<QScalar> exact_divide(const QScalar& a, const QScalar& b);
/// Same as exact_divide but throws DivisionError.
QScalar divide_or_throw(const QScalar& a, const QScalar& b);
/// gcd in Q[q^(1/2), t] of the polynomial parts, normalized monic in lex order.
QScalar polynomial_gcd(const QScalar& a, const QScalar& b);

/// The ubiquitous q^2 - q^(-2).
const QScalar& qdiff();

std::ostream& operator<<(std::ostream& os, const QScalar& s);

/// Reduced quotient of two QScalars.
///
/// Canonical form: the denominator has minimal exponent zero in both q^(1/2)
/// and t and its lex-leading coefficient is 1; numerator and denominator share
/// no nonunit common factor.
class QFraction {
public:
  QFraction() : den_(1) {}
  QFraction(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  QFraction(const QScalar& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  QFraction(const QScalar& n, const QScalar& d);

  const QScalar& num() const { return num_; }
  const QScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  QFraction& operator+=(const QFraction& o);
  QFraction& operator-=(const QFraction& o);
  QFraction& operator*=(const QFraction& o);
  QFraction& operator/=(const QFraction& o);
  QFraction operator-() const;
  friend QFraction operator+(QFraction a, const QFraction& b) { return a += b; }
  friend QFraction operator-(QFraction a, const QFraction& b) { return a -= b; }
  friend QFraction operator*(QFraction a, const QFraction& b) { return a *= b; }
  friend QFraction operator/(QFraction a, const QFraction& b) { return a /= b; }
  friend bool operator==(const QFraction& a, const QFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QFraction& a, const QFraction& b) { return !(a == b); }

  QFraction subst_t(int q2_per_t) const;

  std::string str() const;

private:
  struct Raw {};
  QFraction(Raw, QScalar n, QScalar d) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  QScalar num_;
  QScalar den_;
};

/// Builds the canonical reduced form of n/d. Throws DivisionError if d == 0.
QFraction fraction_normalize(const QScalar& n, const QScalar& d);
/// a == b decided by n_a d_b == n_b d_a.
bool cross_equal(const QFraction& a, const QFraction& b);

std::ostream& operator<<(std::ostream& os, const QFraction& f);

}  // namespace skein
