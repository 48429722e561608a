#include "skein/suites.hpp"

#include <numeric>
#include <random>

#include "skein/daha.hpp"
#include "skein/laurentmod.hpp"
#include "skein/solidtorus.hpp"
#include "skein/statedtorus.hpp"
#include "skein/toruscurves.hpp"

namespace skein {

namespace {

std::string residual(const DahaElement& d) { return d.is_zero() ? std::string() : d.str(); }
std::string residual(const TorusElement& d) { return d.is_zero() ? std::string() : d.str(); }

QFraction qf(int power) { return QFraction(QScalar::q(power)); }

DahaElement t_scalar(int power) { return DahaElement(QFraction(QScalar::t(power))); }

// X <-> X^-1, Y <-> Y^-1 on words in X and Y.
DahaElement flipped(const std::vector<std::pair<int, int>>& word) {
  DahaElement r(QFraction(1));
  for (auto [gen, power] : word) r = r * (gen == 0 ? daha::X(-power) : daha::Y(-power));
  return r;
}

DahaElement word(const std::vector<std::pair<int, int>>& w) {
  DahaElement r(QFraction(1));
  for (auto [gen, power] : w) r = r * (gen == 0 ? daha::X(power) : daha::Y(power));
  return r;
}

using Word = std::vector<std::pair<int, int>>;

// The symmetric test words XY + YX and XY^-1 + YX^-1, as lists of summands.
std::vector<std::vector<Word>> t1_words() {
  return {{{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}}, {{{0, 1}, {1, -1}}, {{1, 1}, {0, -1}}}};
}

DahaElement sum_of(const std::vector<Word>& summands, bool flip) {
  DahaElement r;
  for (const auto& w : summands) r += flip ? flipped(w) : word(w);
  return r;
}

DahaElement at_t_one(const DahaElement& a) { return a.subst_t(0); }

}  // namespace

std::vector<Check> daha_checks() {
  using namespace daha;
  std::vector<Check> v;
  v.push_back({"daha.relation.TXT", "T X T = X^-1", [] { return residual(T() * X() * T() - X(-1)); }});
  v.push_back({"daha.relation.TYinvT", "T Y^-1 T = Y", [] { return residual(T() * Y(-1) * T() - Y()); }});
  v.push_back({"daha.relation.cross", "X Y = q^2 Y X T^2",
               [] { return residual(X() * Y() - qf(2) * (Y() * X() * T() * T())); }});
  v.push_back({"daha.relation.hecke", "(T - t)(T + t^-1) = 0",
               [] { return residual((T() - t_scalar(1)) * (T() + t_scalar(-1))); }});
  v.push_back({"daha.inverse_T", "T^-1 = T + t^-1 - t is a two-sided inverse of T", [] {
                 DahaElement one(QFraction(1));
                 std::string r = residual(inv_T() * T() - one);
                 return r.empty() ? residual(T() * inv_T() - one) : r;
               }});
  v.push_back({"daha.idempotent", "e^2 = e for e = (T + t^-1)/(t + t^-1)", [] {
                 DahaElement e = spherical_idempotent();
                 return residual(e * e - e);
               }});
  v.push_back({"daha.idempotent.complement", "(1 - e) e = 0", [] {
                 DahaElement e = spherical_idempotent();
                 return residual((DahaElement(QFraction(1)) - e) * e);
               }});
  v.push_back({"daha.associativity", "(a b) c = a (b c) on 240 random PBW monomial triples, |n|,|m| <= 3", [] {
                 std::mt19937 rng(31);
                 std::uniform_int_distribution<int> pw(-3, 3), ep(0, 1);
                 auto mono = [&] { return DahaElement::monomial({pw(rng), ep(rng), pw(rng)}); };
                 for (int i = 0; i < 240; ++i) {
                   DahaElement a = mono(), b = mono(), c = mono();
                   DahaElement d = (a * b) * c - a * (b * c);
                   if (!d.is_zero()) return a.str() + " | " + b.str() + " | " + c.str() + ": " + d.str();
                 }
                 return std::string();
               }});
  v.push_back({"daha.spherical.membership", "x, y, z images satisfy e a = a = a e", [] {
                 DahaElement e = spherical_idempotent();
                 for (char g : {'x', 'y', 'z'}) {
                   DahaElement a = terwilliger_image(g);
                   if (!(e * a - a).is_zero()) return std::string(1, g) + ": e a - a = " + (e * a - a).str();
                   if (!(a * e - a).is_zero()) return std::string(1, g) + ": a e - a = " + (a * e - a).str();
                 }
                 return std::string();
               }});
  const char* names[3][3] = {{"x", "y", "z"}, {"y", "z", "x"}, {"z", "x", "y"}};
  for (auto& n : names) {
    std::string id = std::string("daha.terwilliger.") + n[0] + n[1];
    std::string anchor = std::string("[") + n[0] + ", " + n[1] + "]_q = (q^2 - q^-2) " + n[2] + " on the images in eHe";
    char a = n[0][0], b = n[1][0], c = n[2][0];
    v.push_back({id, anchor, [a, b, c] {
                   DahaElement lhs = q_commutator(terwilliger_image(a), terwilliger_image(b));
                   DahaElement rhs = QFraction(qdiff()) * terwilliger_image(c);
                   return residual(lhs - rhs);
                 }});
  }
  v.push_back({"daha.casimir", "q^2 x^2 + q^-2 y^2 + q^2 z^2 - q x y z = ((t/q - q/t)^2 + (q + 1/q)^2) e",
               [] { return residual(casimir_check()); }});
  v.push_back({"daha.casimir.t_equals_q", "at t = q the Casimir value is (q + q^-1)^2", [] {
                 QFraction expected = QFraction(QScalar::q(1) + QScalar::q(-1)) * QFraction(QScalar::q(1) + QScalar::q(-1));
                 QFraction got = casimir_value().subst_t(2);
                 if (got != expected) return "value " + got.str();
                 return residual(casimir_check().subst_t(2));
               }});
  v.push_back({"daha.casimir.central", "the Casimir combination commutes with the x, y, z images", [] {
                 DahaElement x = terwilliger_image('x'), y = terwilliger_image('y'), z = terwilliger_image('z');
                 DahaElement omega = qf(2) * (x * x) + qf(-2) * (y * y) + qf(2) * (z * z) - qf(1) * (x * y * z);
                 for (const auto* g : {&x, &y, &z}) {
                   DahaElement c = omega * *g - *g * omega;
                   if (!c.is_zero()) return c.str();
                 }
                 return std::string();
               }});
  v.push_back({"daha.t1.conjugation_flip", "at t = 1, T w T^-1 is w with X, Y inverted, for w = XY + YX, XY^-1 + YX^-1",
               [] {
                 for (const auto& w : t1_words()) {
                   DahaElement lhs = at_t_one(T() * sum_of(w, false) * inv_T());
                   DahaElement d = lhs - at_t_one(sum_of(w, true));
                   if (!d.is_zero()) return d.str();
                 }
                 return std::string();
               }});
  v.push_back({"daha.t1.symmetrized_central", "at t = 1, w + flip(w) commutes with T", [] {
                 for (const auto& w : t1_words()) {
                   DahaElement s = sum_of(w, false) + sum_of(w, true);
                   DahaElement d = at_t_one(T() * s - s * T());
                   if (!d.is_zero()) return d.str();
                 }
                 return std::string();
               }});
  v.push_back({"daha.t1.word_commutes_with_T", "at t = 1, XY + YX and XY^-1 + YX^-1 commute with T", [] {
                 std::string out;
                 for (const auto& w : t1_words()) {
                   DahaElement d = at_t_one(T() * sum_of(w, false) - sum_of(w, false) * T());
                   if (!d.is_zero()) out += (out.empty() ? "" : "; ") + d.str();
                 }
                 return out;
               }, true});
  return v;
}

namespace {

TorusElement random_torus_element(const TorusPtr& ctx, std::mt19937& rng, int terms, int range) {
  std::uniform_int_distribution<int> ex(-range, range), coef(-3, 3), pw(-4, 4);
  TorusElement a(ctx);
  for (int i = 0; i < terms; ++i) {
    Monomial u(ctx->n());
    for (auto& x : u) x = ex(rng);
    QScalar c;
    c.add_term(coef(rng), pw(rng), 0);
    a.add_term(u, c.is_zero() ? QScalar(1) : c);
  }
  return a;
}

std::string associativity_residual(const TorusPtr& ctx, unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int i = 0; i < trials; ++i) {
    TorusElement a = random_torus_element(ctx, rng, 3, 2);
    TorusElement b = random_torus_element(ctx, rng, 3, 2);
    TorusElement c = random_torus_element(ctx, rng, 3, 2);
    TorusElement d = (a * b) * c - a * (b * c);
    if (!d.is_zero()) return d.str();
  }
  return {};
}

std::vector<Vec2> coprime_pairs(int bound) {
  std::vector<Vec2> out;
  for (int p = -bound; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

std::string oracle_residual(ExprPtr (*build)(int, int)) {
  const auto assignment = standard_curve_assignment();
  for (auto [p, q] : coprime_pairs(8)) {
    TorusElement got = evaluate_curve_expression(build(p, q), assignment);
    TorusElement d = got - curve_element(p, q);
    if (!d.is_zero()) return "(" + std::to_string(p) + "," + std::to_string(q) + "): " + d.str();
  }
  return {};
}

}  // namespace

std::vector<Check> curves_checks() {
  std::vector<Check> v;
  v.push_back({"curves.e_basis_law", "e_{r,s} e_{u,v} = q^(rv - us) e_{r+u,s+v} for |r|,|s|,|u|,|v| <= 4", [] {
                 auto ctx = rank2_torus();
                 for (int r = -4; r <= 4; ++r)
                   for (int s = -4; s <= 4; ++s)
                     for (int u = -4; u <= 4; ++u)
                       for (int w = -4; w <= 4; ++w) {
                         TorusElement d = e_basis(ctx, r, s) * e_basis(ctx, u, w) -
                                          QScalar::q(r * w - u * s) * e_basis(ctx, r + u, s + w);
                         if (!d.is_zero())
                           return "(" + std::to_string(r) + "," + std::to_string(s) + ")(" + std::to_string(u) +
                                  "," + std::to_string(w) + "): " + d.str();
                       }
                 return std::string();
               }});
  v.push_back({"curves.phase_oracle", "closed-form phase agrees with generator transposition counts", [] {
                 std::mt19937 rng(3);
                 std::uniform_int_distribution<int> ex(-3, 3);
                 auto ctx = EmbeddingContext::get().torus6;
                 for (int i = 0; i < 200; ++i) {
                   Monomial u(6), w(6);
                   for (auto& x : u) x = ex(rng);
                   for (auto& x : w) x = ex(rng);
                   if (ctx->phase(u, w) != brute_force_phase(*ctx, u, w)) return std::string("phase mismatch");
                 }
                 return std::string();
               }});
  v.push_back({"curves.torus_associativity", "(a b) c = a (b c) on random sparse elements of A_q and T^6", [] {
                 std::string r = associativity_residual(rank2_torus(), 11, 100);
                 return r.empty() ? associativity_residual(EmbeddingContext::get().torus6, 12, 60) : r;
               }});
  v.push_back({"curves.flip_homomorphism", "the Z2 flip is multiplicative on A_q", [] {
                 std::mt19937 rng(13);
                 for (int i = 0; i < 100; ++i) {
                   TorusElement a = random_torus_element(rank2_torus(), rng, 3, 3);
                   TorusElement b = random_torus_element(rank2_torus(), rng, 3, 3);
                   TorusElement d = z2_flip(a * b) - z2_flip(a) * z2_flip(b);
                   if (!d.is_zero()) return d.str();
                 }
                 return std::string();
               }});
  v.push_back({"curves.chebyshev", "T_0 = 2, T_2 = x^2 - 2, T_3 = x^3 - 3x, T_4 = x^4 - 4x^2 + 2", [] {
                 using C = std::vector<long long>;
                 if (chebyshev(0) != C{2}) return std::string("T_0");
                 if (chebyshev(2) != C{-2, 0, 1}) return std::string("T_2");
                 if (chebyshev(3) != C{0, -3, 0, 1}) return std::string("T_3");
                 if (chebyshev(4) != C{2, 0, -4, 0, 1}) return std::string("T_4");
                 return std::string();
               }});
  v.push_back({"curves.curve_element_symmetric", "curve elements are invariant under the Z2 flip", [] {
                 for (int m = -6; m <= 6; ++m)
                   for (int l = -6; l <= 6; ++l) {
                     if (m == 0 && l == 0) continue;
                     TorusElement c = curve_element(m, l);
                     if (!(z2_flip(c) == c)) return "(" + std::to_string(m) + "," + std::to_string(l) + ")";
                   }
                 return std::string();
               }});
  v.push_back({"curves.farey_parents", "mediant parents sum to (p,q), have determinant +-1 and 0 < w < p", [] {
                 for (int p = 2; p <= 40; ++p)
                   for (int q = -40; q <= 40; ++q) {
                     if (std::gcd(p, q) != 1) continue;
                     auto [a, b] = farey_parents(p, q);
                     std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
                     if (a.first + b.first != p || a.second + b.second != q) return tag + " sum";
                     if (std::abs(a.first * b.second - a.second * b.first) != 1) return tag + " determinant";
                     if (p >= 3 && q >= 0 && q < p && !(0 < b.first && b.first < p)) return tag + " bounds";
                   }
                 return std::string();
               }});
  v.push_back({"curves.bp", "[x,y]_q = (q^2-q^-2) z and cyclic, for the (1,0), (0,1), (1,1) curves in A_q", [] {
                 TorusElement x = curve_element(1, 0), y = curve_element(0, 1), z = curve_element(1, 1);
                 const TorusElement* t[3] = {&x, &y, &z};
                 std::string out;
                 for (int i = 0; i < 3; ++i) {
                   TorusElement d = q_commutator(*t[i], *t[(i + 1) % 3]) - qdiff() * *t[(i + 2) % 3];
                   if (!d.is_zero()) out += (out.empty() ? "" : "; ") + d.str();
                 }
                 return out;
               }});
  v.push_back({"curves.oracle.closed", "nested q-commutator word for (p,q) equals e_{p,q} + e_{-p,-q}, coprime |p|,|q| <= 8",
               [] { return oracle_residual(&curve_expression); }});
  v.push_back({"curves.oracle.tangle", "Dehn-twist word from the base arc X equals the (p,q) curve, coprime |p|,|q| <= 8",
               [] { return oracle_residual(&tangle_expression); }});
  v.push_back({"curves.word_5_3.shape", "the displayed (5,3) word has six brackets, like the twist word for (5,3)", [] {
                 if (literal_word_5_3()->brackets() != 6) return std::string("literal word bracket count");
                 if (tangle_expression(5, 3)->brackets() != 6) return std::string("twist word bracket count");
                 return std::string();
               }});
  v.push_back({"curves.word_5_3.value", "the displayed six-bracket (5,3) word equals e_{5,3} + e_{-5,-3}", [] {
                 TorusElement got = evaluate_curve_expression(literal_word_5_3(), standard_curve_assignment());
                 return residual(got - curve_element(5, 3));
               }});
  return v;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"daha", "embedding", "laurentmod", "solidtorus", "curves", "all"};
  return names;
}

std::vector<Check> suite_checks(const std::string& name) {
  if (name == "daha") return daha_checks();
  if (name == "embedding") return embedding_checks();
  if (name == "laurentmod") return laurentmod_checks();
  if (name == "solidtorus") return solidtorus_checks();
  if (name == "curves") return curves_checks();
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = suite_checks(n);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw UnknownSuiteError("unknown suite '" + name + "'");
}

VerificationReport run_suite(const std::string& name, Execution mode) {
  return run_checks(name, suite_checks(name), mode);
}

}  // namespace skein
