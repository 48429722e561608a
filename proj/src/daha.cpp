// PBW normal form in H_{q,t}.
//
// Rewrite rules (c = t - t^-1):
//   T X    = X^-1 T - c X^-1          T X^-1 = X T + c X^-1
//   Y T    = T Y^-1 + c Y             Y^-1 T = T Y - c Y
//   Y X    = q^-2 (X Y - c X T Y^-1)  Y^-1 X = q^2 X T^2 Y^-1
//   Y^-1 X^-1 = q^-2 (X^-1 Y^-1 - c X T Y^-1)
//   Y X^-1 = q^2 X^-1 Y + c T Y^-1 X^-1
//   T T    = 1 + c T
// Powers are reached by recursion on |m| and |a|. Y^m X^s for m > 0 depends
// on smaller positive m and on negative m; negative m only on values closer
// to zero, so the recursion is well founded.
#include "skein/daha.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace skein {

namespace {

const QScalar& hecke_c() {
  static const QScalar c = QScalar::t(1) - QScalar::t(-1);
  return c;
}

void add_to(PbwCombo& acc, const PbwKey& k, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_scaled(PbwCombo& acc, const PbwCombo& src, const QScalar& c) {
  for (const auto& [k, v] : src) add_to(acc, k, v * c);
}

PbwCombo single(PbwKey k, const QScalar& c = QScalar(1)) { return PbwCombo{{k, c}}; }

// X^n T^e1 T^e2 Y^m with T^2 = 1 + c T.
void add_t_product(PbwCombo& acc, int n, int e1, int e2, int m, const QScalar& c) {
  if (e1 + e2 < 2) {
    add_to(acc, {n, e1 + e2, m}, c);
    return;
  }
  add_to(acc, {n, 0, m}, c);
  add_to(acc, {n, 1, m}, c * hecke_c());
}

// Thread-safe memo table; values are computed outside the lock so the
// recursive rules never deadlock.
template <class Key>
class Memo {
public:
  template <class F>
  const PbwCombo& get(const Key& k, F compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(k);
      if (it != table_.end()) return it->second;
    }
    PbwCombo value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(k, std::move(value)).first->second;
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, PbwCombo> table_;
};

Memo<int>& tx_memo() {
  static Memo<int> m;
  return m;
}
Memo<int>& yt_memo() {
  static Memo<int> m;
  return m;
}
Memo<std::pair<int, int>>& yx_memo() {
  static Memo<std::pair<int, int>> m;
  return m;
}
Memo<std::pair<PbwKey, PbwKey>>& product_memo() {
  static Memo<std::pair<PbwKey, PbwKey>> m;
  return m;
}

const PbwCombo& tx(int a);
const PbwCombo& yt(int m);
const PbwCombo& yx(int m, int s);

PbwCombo times_Y(const PbwCombo& src, int k) {
  PbwCombo r;
  for (const auto& [key, c] : src) add_to(r, {key.n, key.eps, key.m + k}, c);
  return r;
}

PbwCombo times_T(const PbwCombo& src) {
  PbwCombo r;
  for (const auto& [key, c] : src) {
    for (const auto& [k2, c2] : yt(key.m))  // Y^m T = sum T^e Y^b
      add_t_product(r, key.n, key.eps, k2.eps, k2.m, c * c2);
  }
  return r;
}

PbwCombo times_X(const PbwCombo& src, int s) {
  PbwCombo r;
  for (const auto& [key, c] : src) {
    for (const auto& [k2, c2] : yx(key.m, s)) {  // Y^m X^s = sum X^a T^e Y^b
      if (key.eps == 0) {
        add_to(r, {key.n + k2.n, k2.eps, k2.m}, c * c2);
        continue;
      }
      for (const auto& [k3, c3] : tx(k2.n))  // T X^a = sum X^c T^f
        add_t_product(r, key.n + k3.n, k3.eps, k2.eps, k2.m, c * c2 * c3);
    }
  }
  return r;
}

PbwCombo times_T_power(PbwCombo src, int k) {
  for (int i = 0; i < k; ++i) src = times_T(src);
  return src;
}

const PbwCombo& tx(int a) {
  return tx_memo().get(a, [a] {
    if (a == 0) return single({0, 1, 0});
    PbwCombo r;
    if (a > 0) {
      // T X^a = X^-1 (T X^(a-1)) - c X^(a-2)
      for (const auto& [k, c] : tx(a - 1)) add_to(r, {k.n - 1, k.eps, 0}, c);
      add_to(r, {a - 2, 0, 0}, -hecke_c());
    } else {
      // T X^a = X (T X^(a+1)) + c X^a
      for (const auto& [k, c] : tx(a + 1)) add_to(r, {k.n + 1, k.eps, 0}, c);
      add_to(r, {a, 0, 0}, hecke_c());
    }
    return r;
  });
}

const PbwCombo& yt(int m) {
  return yt_memo().get(m, [m] {
    if (m == 0) return single({0, 1, 0});
    PbwCombo r;
    if (m > 0) {
      // Y^m T = (Y^(m-1) T) Y^-1 + c Y^m
      r = times_Y(yt(m - 1), -1);
      add_to(r, {0, 0, m}, hecke_c());
    } else {
      // Y^m T = (Y^(m+1) T) Y - c Y^(m+2)
      r = times_Y(yt(m + 1), 1);
      add_to(r, {0, 0, m + 2}, -hecke_c());
    }
    return r;
  });
}

const PbwCombo& yx(int m, int s) {
  return yx_memo().get({m, s}, [m, s] {
    if (m == 0) return single({s, 0, 0});
    const QScalar q2 = QScalar::q(2);
    const QScalar qm2 = QScalar::q(-2);
    PbwCombo r;
    if (s == 1 && m > 0) {
      const PbwCombo& prev = yx(m - 1, 1);
      add_scaled(r, times_Y(prev, 1), qm2);
      add_scaled(r, times_Y(times_T(prev), -1), -qm2 * hecke_c());
    } else if (s == 1) {
      add_scaled(r, times_Y(times_T_power(yx(m + 1, 1), 2), -1), q2);
    } else if (m < 0) {
      add_scaled(r, times_Y(yx(m + 1, -1), -1), qm2);
      add_scaled(r, times_Y(times_T(yx(m + 1, 1)), -1), -qm2 * hecke_c());
    } else {
      add_scaled(r, times_Y(yx(m - 1, -1), 1), q2);
      // + c (Y^(m-1) T) Y^-1 X^-1
      PbwCombo tail = times_X(times_Y(yt(m - 1), -1), -1);
      add_scaled(r, tail, hecke_c());
    }
    return r;
  });
}

}  // namespace

namespace daha {

PbwCombo rule_T_Xpow(int a) { return tx(a); }
PbwCombo rule_Ypow_T(int m) { return yt(m); }
PbwCombo rule_Ypow_X(int m, int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("s must be +-1");
  return yx(m, s);
}

const PbwCombo& monomial_product(const PbwKey& a, const PbwKey& b) {
  return product_memo().get({a, b}, [&a, &b] {
    PbwCombo r = single(a);
    const int step = b.n > 0 ? 1 : -1;
    for (int i = 0; i != b.n; i += step) r = times_X(r, step);
    if (b.eps) r = times_T(r);
    return times_Y(r, b.m);
  });
}

std::size_t memo_size() { return product_memo().size(); }

}  // namespace daha

DahaElement::DahaElement(const QFraction& c) { add_term({0, 0, 0}, c); }

DahaElement DahaElement::monomial(PbwKey k, const QFraction& c) {
  if (k.eps != 0 && k.eps != 1) throw std::invalid_argument("T exponent in PBW key must be 0 or 1");
  DahaElement e;
  e.add_term(k, c);
  return e;
}

DahaElement DahaElement::from_combo(const PbwCombo& c) {
  DahaElement e;
  for (const auto& [k, v] : c) e.terms_.emplace(k, QFraction(v));
  return e;
}

QFraction DahaElement::coeff(const PbwKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QFraction() : it->second;
}

void DahaElement::add_term(const PbwKey& k, const QFraction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DahaElement& DahaElement::operator+=(const DahaElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DahaElement& DahaElement::operator-=(const DahaElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DahaElement DahaElement::operator-() const {
  DahaElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DahaElement operator*(const QFraction& c, const DahaElement& a) {
  DahaElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms_) r.add_term(k, c * v);
  return r;
}

namespace {

// Common denominator of all coefficients, and the numerators rescaled to it.
QScalar common_denominator(const DahaElement& a, std::vector<std::pair<PbwKey, QScalar>>& out) {
  QScalar d(1);
  for (const auto& [k, c] : a.terms()) {
    if (c.den().is_one() || c.den() == d) continue;
    QScalar g = polynomial_gcd(d, c.den());
    d = d * divide_or_throw(c.den(), g);
  }
  out.reserve(a.terms().size());
  for (const auto& [k, c] : a.terms())
    out.emplace_back(k, c.num() * divide_or_throw(d, c.den()));
  return d;
}

}  // namespace

DahaElement operator*(const DahaElement& a, const DahaElement& b) {
  DahaElement r;
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::pair<PbwKey, QScalar>> as, bs;
  const QScalar da = common_denominator(a, as);
  const QScalar db = common_denominator(b, bs);
  PbwCombo acc;
  for (const auto& [ka, ca] : as)
    for (const auto& [kb, cb] : bs) add_scaled(acc, daha::monomial_product(ka, kb), ca * cb);
  const QScalar d = da * db;
  for (const auto& [k, c] : acc) r.terms_.emplace(k, QFraction(c, d));
  return r;
}

DahaElement DahaElement::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a DAHA element");
  DahaElement r(QFraction(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

DahaElement DahaElement::subst_t(int q2_per_t) const {
  DahaElement r;
  for (const auto& [k, c] : terms_) r.add_term(k, c.subst_t(q2_per_t));
  return r;
}

std::string DahaElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    auto append = [&mono](const std::string& s) {
      if (!mono.empty()) mono += "*";
      mono += s;
    };
    if (k.n == 1) append("X");
    else if (k.n != 0) append("X^" + std::to_string(k.n));
    if (k.eps) append("T");
    if (k.m == 1) append("Y");
    else if (k.m != 0) append("Y^" + std::to_string(k.m));
    std::string coef = c.str();
    bool neg = false;
    if (c.is_polynomial() && c.num().is_monomial() && c.num().terms().begin()->second < 0) {
      neg = true;
      coef = (-c).str();
    } else if (c.is_polynomial() && c.num().size() > 1) {
      coef = "(" + coef + ")";
    }
    std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += term;
    first = false;
  }
  return out;
}

namespace daha {

DahaElement X(int power) { return DahaElement::monomial({power, 0, 0}); }
DahaElement Y(int power) { return DahaElement::monomial({0, 0, power}); }
DahaElement T() { return DahaElement::monomial({0, 1, 0}); }

DahaElement inv_T() {
  DahaElement r = T();
  r.add_term({0, 0, 0}, QFraction(QScalar::t(-1) - QScalar::t(1)));
  return r;
}

DahaElement T_pow(int k) { return k >= 0 ? T().pow(k) : inv_T().pow(-k); }

DahaElement spherical_idempotent() {
  static const DahaElement e = [] {
    DahaElement num = T();
    num.add_term({0, 0, 0}, QFraction(QScalar::t(-1)));
    return QFraction(QScalar(1), QScalar::t(1) + QScalar::t(-1)) * num;
  }();
  return e;
}

DahaElement terwilliger_image(char gen) {
  const DahaElement e = spherical_idempotent();
  switch (gen) {
    case 'x':
      return (X(1) + X(-1)) * e;
    case 'y':
      return (Y(1) + Y(-1)) * e;
    case 'z': {
      DahaElement w = X(1) * Y(1) * T_pow(-2) + X(-1) * Y(-1);
      return QFraction(QScalar::q(-1)) * (w * e);
    }
    default:
      throw std::invalid_argument("Terwilliger generator must be x, y or z");
  }
}

QFraction casimir_value() {
  // (t/q - q/t)^2 + (q + 1/q)^2
  QScalar a = QScalar::monomial(1, -2, 1) - QScalar::monomial(1, 2, -1);
  QScalar b = QScalar::q(1) + QScalar::q(-1);
  return QFraction(a * a + b * b);
}

DahaElement casimir_check() {
  const DahaElement x = terwilliger_image('x');
  const DahaElement y = terwilliger_image('y');
  const DahaElement z = terwilliger_image('z');
  const QFraction q2(QScalar::q(2));
  const QFraction qm2(QScalar::q(-2));
  const QFraction q1(QScalar::q(1));
  DahaElement lhs = q2 * (x * x) + qm2 * (y * y) + q2 * (z * z) - q1 * (x * y * z);
  return lhs - casimir_value() * spherical_idempotent();
}

DahaElement q_commutator(const DahaElement& a, const DahaElement& b) {
  return QFraction(QScalar::q(1)) * (a * b) - QFraction(QScalar::q(-1)) * (b * a);
}

}  // namespace daha

}  // namespace skein
