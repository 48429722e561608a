#include "skein/toruscurves.hpp"

#include <numeric>

namespace skein {

CurveLabel CurveLabel::canonical(int m, int l) {
  if (m < 0 || (m == 0 && l < 0)) return {-m, -l};
  return {m, l};
}

std::vector<long long> chebyshev(int n) {
  if (n < 0) throw DomainError("chebyshev index must be nonnegative");
  std::vector<long long> prev{2};
  if (n == 0) return prev;
  std::vector<long long> cur{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<long long> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TorusElement chebyshev_eval(int n, const TorusElement& x) {
  if (n < 0) throw DomainError("chebyshev index must be nonnegative");
  TorusElement prev(x.context(), QScalar(2));
  if (n == 0) return prev;
  TorusElement cur = x;
  for (int k = 1; k < n; ++k) {
    TorusElement next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TorusElement curve_element(int m, int l) {
  if (m == 0 && l == 0) throw DomainError("curve (0,0) is not defined");
  const int d = std::gcd(m, l);
  const auto ctx = rank2_torus();
  const int a = m / d;
  const int b = l / d;
  return chebyshev_eval(d, e_basis(ctx, a, b) + e_basis(ctx, -a, -b));
}

namespace {

int measure(const Vec2& v) { return std::abs(v.first) + std::abs(v.second); }

int det(const Vec2& a, const Vec2& b) { return a.first * b.second - a.second * b.first; }

// Inverse of a modulo m, m > 1, gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
  long long g0 = m, g1 = ((a % m) + m) % m, x0 = 0, x1 = 1;
  while (g1 != 0) {
    long long t = g0 / g1;
    long long g2 = g0 - t * g1;
    long long x2 = x0 - t * x1;
    g0 = g1;
    g1 = g2;
    x0 = x1;
    x1 = x2;
  }
  return ((x0 % m) + m) % m;
}

// Parents of a coprime p > 0, q >= 0 vector other than (1,0).
std::pair<Vec2, Vec2> mediant_parents_nonneg(int p, int q) {
  if (p == 1) return {{1, q - 1}, {0, 1}};
  if (q == 0) throw DomainError("(p,0) with p > 1 is not primitive");
  // u q - v p = 1 with 0 < u < p fixes both parents.
  long long u = mod_inverse(q, p);
  long long v = (u * q - 1) / p;
  Vec2 a{static_cast<int>(u), static_cast<int>(v)};
  Vec2 b{p - a.first, q - a.second};
  return measure(a) >= measure(b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::pair<Vec2, Vec2> mediant_parents(int p, int q) {
  if (q >= 0) return mediant_parents_nonneg(p, q);
  auto [a, b] = mediant_parents_nonneg(p, -q);
  return {{a.first, -a.second}, {b.first, -b.second}};
}

void require_coprime(int p, int q) {
  if ((p == 0 && q == 0) || std::gcd(p, q) != 1) throw DomainError("curve slope must be coprime");
}

const char* generator_leaf(const Vec2& v) {
  CurveLabel c = CurveLabel::canonical(v.first, v.second);
  if (c == CurveLabel{1, 0}) return "Y1";
  if (c == CurveLabel{0, 1}) return "Y2";
  if (c == CurveLabel{1, 1}) return "Y3";
  return nullptr;
}

Vec2 canonical_vec(const Vec2& v) {
  CurveLabel c = CurveLabel::canonical(v.first, v.second);
  return {c.m, c.l};
}

// Twist of the curve/tangle `twisted` along the closed curve `twister`;
// the bracket direction and sign are fixed by det so that the value is the
// curve of slope twister + twisted.
ExprPtr twist_node(ExprPtr twister, const Vec2& tw, ExprPtr twisted, const Vec2& td) {
  const int d = det(tw, td);
  if (d == 1) return CommutatorExpr::make_node(std::move(twister), std::move(twisted), 1, 1);
  if (d == -1) return CommutatorExpr::make_node(std::move(twister), std::move(twisted), -1, -1);
  throw DomainError("mediant parents must have determinant +-1");
}

ExprPtr closed_word(const Vec2& target) {
  if (const char* g = generator_leaf(target)) return CommutatorExpr::make_leaf(g);
  Vec2 v = canonical_vec(target);
  auto [big, small] = mediant_parents(v.first, v.second);
  // A generator parent twists the other one; otherwise the larger one twists.
  if (generator_leaf(small)) return twist_node(closed_word(small), small, closed_word(big), big);
  return twist_node(closed_word(big), big, closed_word(small), small);
}

// Twist chain starting from `base` at slope (1,0).
ExprPtr chain_word(const Vec2& target, const std::string& base) {
  Vec2 v = canonical_vec(target);
  if (v == Vec2{1, 0}) return CommutatorExpr::make_leaf(base);
  if (v == Vec2{0, 1}) {
    // (0,1) = (-1,1) + (1,0): twist the base arc along the (1,-1) curve.
    return twist_node(chain_word({1, -1}, "Y1"), {-1, 1}, CommutatorExpr::make_leaf(base), {1, 0});
  }
  auto [big, small] = mediant_parents(v.first, v.second);
  auto is_base = [](const Vec2& x) { return canonical_vec(x) == Vec2{1, 0}; };
  Vec2 twister, twisted;
  if (measure(big) == measure(small)) {
    // Only (1,+-1): twist the base arc along Y2.
    twister = is_base(big) ? small : big;
    twisted = is_base(big) ? big : small;
  } else if (generator_leaf(small)) {
    twister = small;
    twisted = big;
  } else if (generator_leaf(big)) {
    twister = big;
    twisted = small;
  } else {
    twister = big;
    twisted = small;
  }
  ExprPtr tw = generator_leaf(twister) ? CommutatorExpr::make_leaf(generator_leaf(twister))
                                       : chain_word(twister, "Y1");
  return twist_node(std::move(tw), twister, chain_word(twisted, base), twisted);
}

}  // namespace

std::pair<Vec2, Vec2> farey_parents(int p, int q) {
  if (p <= 0) throw DomainError("farey_parents requires p > 0");
  require_coprime(p, q);
  if (generator_leaf({p, q}) || (p == 1 && q == -1))
    throw DomainError("base case has no mediant parents");
  return mediant_parents(p, q);
}

ExprPtr CommutatorExpr::make_leaf(std::string name) {
  auto e = std::make_shared<CommutatorExpr>();
  e->leaf = std::move(name);
  return e;
}

ExprPtr CommutatorExpr::make_node(ExprPtr a, ExprPtr b, int dir, int sign) {
  auto e = std::make_shared<CommutatorExpr>();
  e->left = std::move(a);
  e->right = std::move(b);
  e->dir = dir;
  e->sign = sign;
  return e;
}

int CommutatorExpr::brackets() const {
  return is_leaf() ? 0 : 1 + left->brackets() + right->brackets();
}

int CommutatorExpr::depth() const {
  return is_leaf() ? 0 : 1 + std::max(left->depth(), right->depth());
}

std::string CommutatorExpr::str() const {
  if (is_leaf()) return leaf;
  std::string s = sign < 0 ? "-[" : "[";
  s += left->str() + ", " + right->str() + "]_";
  s += dir > 0 ? "q" : "{q^-1}";
  return s;
}

std::string CommutatorExpr::normalized_str() const {
  const int n = brackets();
  if (n == 0) return str();
  std::string prefix = "1/(q^2 - q^(-2))";
  if (n > 1) prefix = "1/(q^2 - q^(-2))^" + std::to_string(n);
  return prefix + " " + str();
}

ExprPtr curve_expression(int p, int q) {
  require_coprime(p, q);
  return closed_word({p, q});
}

ExprPtr tangle_expression(int p, int q) {
  require_coprime(p, q);
  return chain_word({p, q}, "X");
}

ExprPtr literal_word_5_3() {
  using E = CommutatorExpr;
  auto Y1 = E::make_leaf("Y1");
  auto Y2 = E::make_leaf("Y2");
  auto Y3 = E::make_leaf("Y3");
  auto X = E::make_leaf("X");
  auto left = E::make_node(Y3, E::make_node(Y1, E::make_node(Y2, Y1, -1, 1), 1, 1), -1, 1);
  auto right = E::make_node(Y1, E::make_node(Y2, X, -1, 1), 1, 1);
  return E::make_node(left, right, 1, -1);
}

TorusElement evaluate_curve_expression(const ExprPtr& e,
                                       const std::map<std::string, TorusElement>& assignment) {
  if (e->is_leaf()) {
    auto it = assignment.find(e->leaf);
    if (it == assignment.end()) throw DomainError("unassigned leaf " + e->leaf);
    return it->second;
  }
  TorusElement a = evaluate_curve_expression(e->left, assignment);
  TorusElement b = evaluate_curve_expression(e->right, assignment);
  TorusElement r = q_commutator(a, b, e->dir < 0).divide_exact(qdiff());
  return e->sign < 0 ? -r : r;
}

std::map<std::string, TorusElement> standard_curve_assignment() {
  TorusElement y1 = curve_element(1, 0);
  return {{"Y1", y1}, {"Y2", curve_element(0, 1)}, {"Y3", curve_element(1, 1)}, {"X", y1}};
}

}  // namespace skein
