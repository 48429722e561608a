#include "skein/qtorus.hpp"

#include <ostream>

namespace skein {

AntisymMatrix::AntisymMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw ContextError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (rows_[i][j] != -rows_[j][i]) throw ContextError("matrix is not antisymmetric");
  }
}

TorusContext::TorusContext(AntisymMatrix q, std::vector<std::string> names)
    : q_(std::move(q)), names_(std::move(names)) {
  if (static_cast<int>(names_.size()) != q_.n()) throw ContextError("one name per generator");
}

// Moving x_j^(v_j) left past x_i^(u_i) for i > j picks up q^(Q_ij u_i v_j).
int TorusContext::phase(const Monomial& u, const Monomial& v) const {
  const int n = this->n();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw ContextError("monomial dimension mismatch");
  int p = 0;
  for (int i = 1; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < i; ++j) p += q_(i, j) * u[i] * v[j];
  }
  return p;
}

int TorusContext::pairing(const Monomial& u, const Monomial& v) const {
  int p = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) p += q_(i, j) * u[i] * v[j];
  return p;
}

int brute_force_phase(const TorusContext& ctx, const Monomial& u, const Monomial& v) {
  // Word of signed letters, bubble-sorted into ascending generator order.
  struct Letter {
    int gen;
    int sign;
  };
  std::vector<Letter> word;
  for (const Monomial* m : {&u, &v})
    for (int i = 0; i < ctx.n(); ++i)
      for (int k = 0; k < std::abs((*m)[i]); ++k) word.push_back({i, (*m)[i] > 0 ? 1 : -1});
  int p = 0;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      const Letter a = word[k];
      const Letter b = word[k + 1];
      if (a.gen > b.gen) {
        p += ctx.matrix()(a.gen, b.gen) * a.sign * b.sign;
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
  }
  return p;
}

TorusPtr rank2_torus() {
  static const TorusPtr ctx = std::make_shared<const TorusContext>(
      AntisymMatrix({{0, 2}, {-2, 0}}), std::vector<std::string>{"X", "Y"});
  return ctx;
}

TorusElement::TorusElement(TorusPtr ctx) : ctx_(std::move(ctx)) {}

TorusElement::TorusElement(TorusPtr ctx, const QScalar& c) : ctx_(std::move(ctx)) {
  add_term(Monomial(ctx_->n(), 0), c);
}

TorusElement TorusElement::monomial(TorusPtr ctx, Monomial u, const QScalar& c) {
  if (static_cast<int>(u.size()) != ctx->n()) throw ContextError("monomial dimension mismatch");
  TorusElement r(std::move(ctx));
  r.add_term(u, c);
  return r;
}

TorusElement TorusElement::generator(TorusPtr ctx, int i, int power) {
  if (i < 0 || i >= ctx->n()) throw ContextError("generator index out of range");
  Monomial u(ctx->n(), 0);
  u[i] = power;
  return monomial(std::move(ctx), std::move(u));
}

QScalar TorusElement::coeff(const Monomial& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? QScalar() : it->second;
}

void TorusElement::add_term(const Monomial& u, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(u, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void require_same_context(const TorusElement& a, const TorusElement& b) {
  if (a.context() == b.context()) return;
  if (a.context()->matrix() == b.context()->matrix()) return;
  throw ContextError("elements live in different quantum tori");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same_context(*this, o);
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same_context(*this, o);
  for (const auto& [u, c] : o.terms_) add_term(u, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [u, c] : r.terms_) c = -c;
  return r;
}

TorusElement& TorusElement::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [u, x] : terms_) x *= c;
  return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  require_same_context(a, b);
  const TorusContext& ctx = *a.ctx_;
  TorusElement r(a.ctx_);
  Monomial w(ctx.n());
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      for (int i = 0; i < ctx.n(); ++i) w[i] = u[i] + v[i];
      r.add_term(w, (cu * cv).shifted(2 * ctx.phase(u, v), 0));
    }
  }
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  require_same_context(a, b);
  return a.terms_ == b.terms_;
}

TorusElement TorusElement::monomial_inverse() const {
  if (terms_.size() != 1) throw DivisionError("inverse of a non-monomial torus element");
  const auto& [u, c] = *terms_.begin();
  auto ci = c.monomial_inverse();
  if (!ci) throw DivisionError("inverse of a monomial with non-unit coefficient");
  Monomial neg(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
  // x^u x^(-u) = q^phase(u,-u), so the inverse carries q^(-phase).
  return monomial(ctx_, neg, ci->shifted(-2 * ctx_->phase(u, neg), 0));
}

TorusElement TorusElement::pow(int n) const {
  if (n < 0) return monomial_inverse().pow(-n);
  TorusElement result(ctx_, QScalar(1));
  TorusElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

TorusElement TorusElement::divide_exact(const QScalar& d) const {
  TorusElement r(ctx_);
  for (const auto& [u, c] : terms_) r.terms_.emplace(u, divide_or_throw(c, d));
  return r;
}

std::string render_terms(const std::map<Monomial, QScalar>& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (u[i] != 1) mono += "^" + std::to_string(u[i]);
    }
    std::string coef;
    bool neg = false;
    if (c.is_monomial() && c.terms().begin()->second < 0) {
      neg = true;
      coef = (-c).str();
    } else {
      coef = c.str();
    }
    if (c.size() > 1) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (first) {
      out += neg ? "-" + term : term;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
    first = false;
  }
  return out;
}

std::string TorusElement::str() const { return render_terms(terms_, ctx_->names()); }

std::ostream& operator<<(std::ostream& os, const TorusElement& a) { return os << a.str(); }

TorusElement q_commutator(const TorusElement& a, const TorusElement& b, bool inverse_q) {
  const QScalar qp = QScalar::q(inverse_q ? -1 : 1);
  const QScalar qm = QScalar::q(inverse_q ? 1 : -1);
  return qp * (a * b) - qm * (b * a);
}

TorusElement e_basis(const TorusPtr& ctx, int r, int s) {
  if (ctx->n() != 2) throw ContextError("e-basis requires a rank-2 torus");
  return TorusElement::monomial(ctx, {r, s}, QScalar::q(-r * s));
}

TorusElement z2_flip(const TorusElement& a) {
  if (a.context()->n() != 2) throw ContextError("z2 flip requires a rank-2 torus");
  // X -> X^-1, Y -> Y^-1 sends the ordered word X^r Y^s to X^-r Y^-s.
  TorusElement r(a.context());
  for (const auto& [u, c] : a.terms()) r.add_term({-u[0], -u[1]}, c);
  return r;
}

}  // namespace skein
