#include "skein/scalars.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace skein {

QScalar::QScalar(long v) {
  if (v != 0) terms_.emplace(Key{0, 0}, Rational(v));
}

QScalar::QScalar(const Rational& v) {
  if (v != 0) terms_.emplace(Key{0, 0}, v);
}

QScalar QScalar::monomial(const Rational& c, int q2, int tpow) {
  QScalar s;
  if (c != 0) s.terms_.emplace(Key{q2, tpow}, c);
  return s;
}

bool QScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
         terms_.begin()->second == 1;
}

Rational QScalar::coeff(int q2, int tpow) const {
  auto it = terms_.find(Key{q2, tpow});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool QScalar::integral_q() const {
  for (const auto& [k, c] : terms_)
    if (k.first % 2 != 0) return false;
  return true;
}

bool QScalar::has_t() const {
  for (const auto& [k, c] : terms_)
    if (k.second != 0) return true;
  return false;
}

void QScalar::add_term(const Rational& c, int q2, int tpow) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(Key{q2, tpow}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QScalar& QScalar::operator+=(const QScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_monomial()) {
    const auto& [kb, cb] = *b.terms_.begin();
    for (const auto& [ka, ca] : a.terms_)
      r.terms_.emplace_hint(r.terms_.end(), QScalar::Key{ka.first + kb.first, ka.second + kb.second},
                            ca * cb);
    return r;
  }
  if (a.is_monomial()) return b * a;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

QScalar QScalar::shifted(int dq2, int dt) const {
  QScalar r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), Key{k.first + dq2, k.second + dt}, c);
  return r;
}

std::optional<QScalar> QScalar::monomial_inverse() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [k, c] = *terms_.begin();
  return monomial(1 / c, -k.first, -k.second);
}

QScalar QScalar::pow(int n) const {
  if (n < 0) {
    auto inv = monomial_inverse();
    if (!inv) throw DivisionError("negative power of a non-monomial scalar");
    return inv->pow(-n);
  }
  QScalar result(1);
  QScalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

QScalar QScalar::subst_t(int q2_per_t) const {
  QScalar r;
  for (const auto& [k, c] : terms_) r.add_term(c, k.first + q2_per_t * k.second, 0);
  return r;
}

QScalar QScalar::subst_q_one() const {
  QScalar r;
  for (const auto& [k, c] : terms_) r.add_term(c, 0, k.second);
  return r;
}

QScalar QScalar::invert_q() const {
  QScalar r;
  for (const auto& [k, c] : terms_) r.add_term(c, -k.first, k.second);
  return r;
}

QScalar::Key QScalar::min_exponents() const {
  Key m = terms_.begin()->first;
  for (const auto& [k, c] : terms_) {
    m.first = std::min(m.first, k.first);
    m.second = std::min(m.second, k.second);
  }
  return m;
}

namespace {

std::string exponent_text(int num, int den) {
  // num/den in lowest terms with den in {1, 2}
  if (den == 2 && num % 2 == 0) {
    num /= 2;
    den = 1;
  }
  std::string body = den == 1 ? std::to_string(num) : std::to_string(num) + "/2";
  if (den == 1 && num >= 0) return body;
  return "(" + body + ")";
}

std::string monomial_text(int q2, int tpow) {
  std::string s;
  if (q2 != 0) {
    s += "q";
    if (q2 != 2) s += "^" + exponent_text(q2 % 2 == 0 ? q2 / 2 : q2, q2 % 2 == 0 ? 1 : 2);
  }
  if (tpow != 0) {
    if (!s.empty()) s += "*";
    s += "t";
    if (tpow != 1) s += "^" + exponent_text(tpow, 1);
  }
  return s;
}

}  // namespace

std::string QScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(k.first, k.second);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.str(); }

// Recursive-descent parser for sums of rational multiples of q^(a) t^(b).
namespace {

class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : src_(s) {}

  QScalar parse_all() {
    QScalar v = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected character in scalar", pos_);
    return v;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  QScalar parse_sum() {
    QScalar acc;
    bool neg = accept('-');
    if (!neg) accept('+');
    QScalar term = parse_product();
    acc += neg ? -term : term;
    for (;;) {
      if (accept('+')) {
        acc += parse_product();
      } else if (accept('-')) {
        acc -= parse_product();
      } else {
        return acc;
      }
    }
  }

  QScalar parse_product() {
    QScalar acc = parse_factor();
    for (;;) {
      if (accept('*')) {
        acc *= parse_factor();
      } else if (accept('/')) {
        QScalar d = parse_factor();
        acc = divide_or_throw(acc, d);
      } else {
        char c = peek();
        if (c == 'q' || c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
          acc *= parse_factor();
        } else {
          return acc;
        }
      }
    }
  }

  // Exponent: integer, -integer, or parenthesized p or p/2.
  Rational parse_exponent() {
    skip_ws();
    if (accept('(')) {
      bool neg = accept('-');
      Rational num(parse_integer());
      if (accept('/')) num /= Rational(parse_integer());
      if (!accept(')')) throw ParseError("expected ')' in exponent", pos_);
      return neg ? Rational(-num) : num;
    }
    bool neg = accept('-');
    Rational v(parse_integer());
    return neg ? Rational(-v) : v;
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  QScalar parse_factor() {
    skip_ws();
    QScalar base;
    if (accept('(')) {
      base = parse_sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
    } else if (accept('q')) {
      base = QScalar::q(1);
      if (accept('^')) {
        Rational e = parse_exponent();
        Rational twice = e * 2;
        if (twice.get_den() != 1) throw ParseError("q exponent must be a multiple of 1/2", pos_);
        return QScalar::q_half(static_cast<int>(twice.get_num().get_si()));
      }
      return base;
    } else if (accept('t')) {
      if (accept('^')) {
        Rational e = parse_exponent();
        if (e.get_den() != 1) throw ParseError("t exponent must be an integer", pos_);
        return QScalar::t(static_cast<int>(e.get_num().get_si()));
      }
      return QScalar::t(1);
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = QScalar(Rational(parse_integer()));
    } else {
      throw ParseError("unexpected token in scalar", pos_);
    }
    if (accept('^')) {
      Rational e = parse_exponent();
      if (e.get_den() != 1) throw ParseError("fractional power of a non-monomial", pos_);
      base = base.pow(static_cast<int>(e.get_num().get_si()));
    }
    return base;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

QScalar QScalar::parse(std::string_view src) { return ScalarParser(src).parse_all(); }

const QScalar& qdiff() {
  static const QScalar v = QScalar::q(2) - QScalar::q(-2);
  return v;
}

// Exact Laurent division by lex leading terms. Once both operands are shifted
// to have minimal exponents zero, the quotient is Laurent iff the shifted
// polynomial division is exact, so the loop below decides divisibility.
std::optional<QScalar> exact_divide(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw DivisionError("division by zero scalar");
  if (a.is_zero()) return QScalar();
  if (b.is_monomial()) return a * *b.monomial_inverse();

  auto [bq, bt] = b.min_exponents();
  auto [aq, at] = a.min_exponents();
  QScalar A = a.shifted(-aq, -at);
  QScalar B = b.shifted(-bq, -bt);
  auto [lq, lt] = B.leading_key();
  Rational lc = B.terms().rbegin()->second;
  // Quotient terms have exponents bounded by the Newton box of A minus that of B.
  auto max_t = [](const QScalar& s) {
    int m = 0;
    for (const auto& [k, c] : s.terms()) m = std::max(m, k.second);
    return m;
  };
  const int q_room = A.leading_key().first - lq;
  const int t_room = max_t(A) - max_t(B);
  QScalar quotient;
  while (!A.is_zero()) {
    auto [rq, rt] = A.leading_key();
    int dq = rq - lq;
    int dt = rt - lt;
    if (dq < 0 || dt < 0 || dq > q_room || dt > t_room) return std::nullopt;
    Rational c = A.terms().rbegin()->second / lc;
    quotient.add_term(c, dq, dt);
    for (const auto& [k, cb] : B.terms()) A.add_term(-c * cb, k.first + dq, k.second + dt);
  }
  return quotient.shifted(aq - bq, at - bt);
}

QScalar divide_or_throw(const QScalar& a, const QScalar& b) {
  auto r = exact_divide(a, b);
  if (!r) throw DivisionError("inexact division: (" + a.str() + ") / (" + b.str() + ")");
  return *r;
}

}  // namespace skein
