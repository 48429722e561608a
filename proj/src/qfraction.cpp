// Fraction field of Q[q^(+-1/2), t^(+-1)].
//
// Reduction uses gcds in Q[s][t] with s = q^(1/2): contents are univariate
// gcds in Q[s], primitive parts come from a primitive pseudo-remainder
// sequence in t.
#include <algorithm>
#include <ostream>
#include <vector>

#include "skein/scalars.hpp"

namespace skein {

namespace {

// Dense polynomial in s, index = degree.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly upoly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = quot * b + rem over Q.
void upoly_divmod(UPoly a, const UPoly& b, UPoly& quot, UPoly& rem) {
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lb;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  rem = std::move(a);
}

UPoly upoly_monic(UPoly p) {
  if (p.empty()) return p;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    upoly_divmod(a, b, q, r);
    a = std::move(b);
    b = upoly_monic(std::move(r));
  }
  return upoly_monic(std::move(a));
}

UPoly upoly_exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  upoly_divmod(a, b, q, r);
  return q;
}

// Polynomial in t with coefficients in Q[s], index = t-degree.
using BPoly = std::vector<UPoly>;

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_bpoly(const QScalar& a, int q0, int t0) {
  BPoly p;
  for (const auto& [k, c] : a.terms()) {
    auto ti = static_cast<std::size_t>(k.second - t0);
    auto si = static_cast<std::size_t>(k.first - q0);
    if (p.size() <= ti) p.resize(ti + 1);
    if (p[ti].size() <= si) p[ti].resize(si + 1);
    p[ti][si] = c;
  }
  return p;
}

QScalar from_bpoly(const BPoly& p) {
  QScalar r;
  for (std::size_t ti = 0; ti < p.size(); ++ti)
    for (std::size_t si = 0; si < p[ti].size(); ++si)
      r.add_term(p[ti][si], static_cast<int>(si), static_cast<int>(ti));
  return r;
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? upoly_monic(c) : upoly_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

// Scales p to integer coefficients with no common integer factor.
void clear_rationals(BPoly& p) {
  mpz_class den = 1, num = 0;
  for (const auto& c : p)
    for (const auto& x : c) {
      if (x == 0) continue;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
  if (num == 0) return;
  const Rational scale(den, num);
  for (auto& c : p)
    for (auto& x : c) x *= scale;
}

BPoly primitive_part(const BPoly& p) {
  UPoly c = content(p);
  BPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(x.empty() ? UPoly{} : upoly_exact_div(x, c));
  clear_rationals(r);
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, in t.
BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& c : a) c = upoly_mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = upoly_sub(a[shift + j], upoly_mul(la, b[j]));
    trim(a);
  }
  return a;
}

BPoly bpoly_gcd(const BPoly& a, const BPoly& b) {
  UPoly g_content = upoly_gcd(content(a), content(b));
  BPoly x = primitive_part(a);
  BPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? BPoly{} : primitive_part(r);
  }
  BPoly g = x.size() <= 1 ? BPoly{UPoly{Rational(1)}} : x;
  for (auto& c : g) c = upoly_mul(c, g_content);
  trim(g);
  return g;
}

}  // namespace

QScalar polynomial_gcd(const QScalar& a, const QScalar& b) {
  if (a.is_zero() && b.is_zero()) return QScalar();
  if (a.is_zero() || b.is_zero()) {
    const QScalar& x = a.is_zero() ? b : a;
    auto [q0, t0] = x.min_exponents();
    QScalar p = x.shifted(-q0, -t0);
    return p * QScalar(Rational(1) / p.terms().rbegin()->second);
  }
  auto [aq, at] = a.min_exponents();
  auto [bq, bt] = b.min_exponents();
  QScalar g = from_bpoly(bpoly_gcd(to_bpoly(a, aq, at), to_bpoly(b, bq, bt)));
  return g * QScalar(Rational(1) / g.terms().rbegin()->second);
}

QFraction::QFraction(const QScalar& n, const QScalar& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw DivisionError("fraction with zero denominator");
  normalize();
}

void QFraction::normalize() {
  if (num_.is_zero()) {
    den_ = QScalar(1);
    return;
  }
  if (!den_.is_monomial()) {
    QScalar g = polynomial_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  // Fix the unit: denominator with minimal exponents zero and monic lead.
  auto [q0, t0] = den_.min_exponents();
  Rational lc = den_.terms().rbegin()->second;
  QScalar unit = QScalar::monomial(1 / lc, -q0, -t0);
  num_ *= unit;
  den_ *= unit;
}

QFraction fraction_normalize(const QScalar& n, const QScalar& d) { return QFraction(n, d); }

bool cross_equal(const QFraction& a, const QFraction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

QFraction QFraction::operator-() const { return QFraction(Raw{}, -num_, den_); }

QFraction& QFraction::operator+=(const QFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = QScalar(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QFraction& QFraction::operator-=(const QFraction& o) { return *this += -o; }

QFraction& QFraction::operator*=(const QFraction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QFraction();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

QFraction& QFraction::operator/=(const QFraction& o) {
  if (o.is_zero()) throw DivisionError("division by zero fraction");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

QFraction QFraction::subst_t(int q2_per_t) const {
  QScalar d = den_.subst_t(q2_per_t);
  if (d.is_zero()) throw DivisionError("denominator vanishes under substitution");
  return QFraction(num_.subst_t(q2_per_t), d);
}

std::string QFraction::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const QScalar& s) { return s.size() > 1 ? "(" + s.str() + ")" : s.str(); };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const QFraction& f) { return os << f.str(); }

}  // namespace skein
