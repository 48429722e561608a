#include "skein/statedtorus.hpp"

#include <array>

namespace skein {

AntisymMatrix stated_torus_matrix() {
  return AntisymMatrix({{0, 2, 2, -2, 0, -4},
                        {-2, 0, -2, -4, 0, -4},
                        {-2, 2, 0, -2, 0, -4},
                        {2, 4, 2, 0, 0, -4},
                        {0, 0, 0, 0, 0, 0},
                        {4, 4, 4, 4, 0, 0}});
}

namespace {

struct Term6 {
  std::array<int, 6> e;
  int q2;  // coefficient q^(q2/2)
};

TorusElement build(const TorusPtr& ctx, std::initializer_list<Term6> terms) {
  TorusElement r(ctx);
  for (const auto& t : terms) r.add_term(Monomial(t.e.begin(), t.e.end()), QScalar::q_half(t.q2));
  return r;
}

TorusElement scaled_generator(const TorusPtr& ctx, int i) {
  return TorusElement::generator(ctx, i) * QScalar::q_half(1);
}

const QScalar& qdiff_cubed() {
  static const QScalar v = qdiff().pow(3);
  return v;
}

std::string diff_or_empty(const TorusElement& lhs, const TorusElement& rhs) {
  if (lhs == rhs) return {};
  return (lhs - rhs).str();
}

}  // namespace

const EmbeddingContext& EmbeddingContext::get() {
  static const EmbeddingContext ctx = [] {
    TorusPtr t = std::make_shared<const TorusContext>(
        stated_torus_matrix(), std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "x6"});
    EmbeddingContext c{t, TorusElement(t), TorusElement(t), TorusElement(t), TorusElement(t),
                       TorusElement(t), TorusElement(t), TorusElement(t), TorusElement(t),
                       TorusElement(t), TorusElement(t)};
    c.y1 = build(t, {{{0, 1, -1, 0, 0, 0}, -2},
                     {{0, -1, 1, 0, 0, 0}, -2},
                     {{2, 0, -1, -1, 0, 0}, 2},
                     {{1, -1, 0, -1, 1, 0}, 4}});
    c.y2 = build(t, {{{1, 0, -1, 0, 0, 0}, 2}, {{-1, 0, 1, 0, 0, 0}, 2}, {{-1, 1, -1, 1, 0, 0}, -2}});
    c.y3 = build(t, {{{1, 0, 0, -1, 0, 0}, -2},
                     {{-1, 0, 0, 1, 0, 0}, -2},
                     {{-1, -1, 2, 0, 0, 0}, -2},
                     {{0, -1, 1, -1, 1, 0}, 0}});
    c.boundary = build(t, {{{0, -1, 0, 1, 0, 0}, -4},
                           {{0, 1, 0, -1, 0, 0}, -4},
                           {{-1, 0, 1, -1, 1, 0}, 2},
                           {{1, 0, -1, -1, 1, 0}, 2},
                           {{-1, 0, -1, 1, 1, 0}, -6},
                           {{1, -1, -1, 0, 1, 0}, 6},
                           {{-1, 1, -1, 0, 1, 0}, -2},
                           {{-1, -1, 1, 0, 1, 0}, -2},
                           {{0, -1, 0, -1, 2, 0}, 4}});
    c.X1_0_pp = scaled_generator(t, 0);
    c.X2_0_pp = scaled_generator(t, 1);
    c.X3_0_pp = scaled_generator(t, 2);
    c.boundary_arc_pp = scaled_generator(t, 4);
    c.X1_half_pp = build(t, {{{0, 0, -1, 1, 1, 0}, -1},
                             {{2, -1, -1, 0, 1, 0}, 11},
                             {{1, -1, 0, 1, 0, 0}, 1}});
    c.X1_minushalf_pp = build(t, {{{1, 1, 0, -1, 0, 0}, -7}, {{0, 0, 1, -1, 1, 0}, -1}});
    return c;
  }();
  return ctx;
}

std::vector<std::string> EmbeddingContext::names() {
  return {"y1",      "y2",           "y3",  "boundary", "X1_0", "X2_0", "X3_0", "X1_half",
          "X1_minushalf", "arc", "x1", "x2",       "x3",   "x4",   "x5",   "x6"};
}

TorusElement EmbeddingContext::named(const std::string& name) const {
  if (name == "y1" || name == "Y1") return y1;
  if (name == "y2" || name == "Y2") return y2;
  if (name == "y3" || name == "Y3") return y3;
  if (name == "boundary") return boundary;
  if (name == "X1_0") return X1_0_pp;
  if (name == "X2_0") return X2_0_pp;
  if (name == "X3_0") return X3_0_pp;
  if (name == "X1_half") return X1_half_pp;
  if (name == "X1_minushalf") return X1_minushalf_pp;
  if (name == "arc") return boundary_arc_pp;
  if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '6')
    return TorusElement::generator(torus6, name[1] - '1');
  throw ContextError("unknown embedding constant " + name);
}

TorusElement boundary_from_curves(const TorusElement& y1, const TorusElement& y2,
                                  const TorusElement& y3) {
  const auto ctx = y1.context();
  TorusElement r = QScalar::q(1) * (y1 * y2 * y3);
  r -= QScalar::q(2) * (y1 * y1);
  r -= QScalar::q(-2) * (y2 * y2);
  r -= QScalar::q(2) * (y3 * y3);
  r += TorusElement(ctx, QScalar::q(2) + QScalar::q(-2));
  return r;
}

TorusElement twist_shift_up(const TorusElement& a) {
  const auto& E = EmbeddingContext::get();
  TorusElement inner = q_commutator(E.y3, a);
  TorusElement mid = q_commutator(E.y1, inner);
  return q_commutator(E.y2, mid).divide_exact(qdiff_cubed());
}

TorusElement twist_shift_down(const TorusElement& a) {
  const auto& E = EmbeddingContext::get();
  TorusElement inner = q_commutator(a, E.y2);
  TorusElement mid = q_commutator(inner, E.y1);
  return q_commutator(mid, E.y3).divide_exact(qdiff_cubed());
}

TorusElement x3_commutator_residual() {
  const auto& E = EmbeddingContext::get();
  return q_commutator(E.X1_0_pp, E.y2).divide_exact(qdiff()) - E.X3_0_pp;
}

std::string StateLabel::str() const {
  return std::string("(") + (mu > 0 ? "+" : "-") + "," + (nu > 0 ? "+" : "-") + ")";
}

std::string Sym::str() const {
  std::string base;
  switch (kind) {
    case SymKind::X1: base = "X1"; break;
    case SymKind::X2: base = "X2"; break;
    case SymKind::X3: base = "X3"; break;
    case SymKind::X3tilde: base = "X3~"; break;
    case SymKind::Y1: return "Y1";
    case SymKind::Y3tilde: return "Y3~";
  }
  base += half_back ? "[k-1/2]" : "[k]";
  return base + state.str();
}

std::string RelationEntry::str() const {
  auto side = [](const std::vector<FormalTerm>& terms) {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) s += " + ";
      std::string c = terms[i].coeff.str();
      if (terms[i].coeff.size() > 1) c = "(" + c + ")";
      std::string w;
      for (const auto& sym : terms[i].word) w += (w.empty() ? "" : " ") + sym.str();
      s += (c == "1" && !w.empty()) ? w : (w.empty() ? c : c + " " + w);
    }
    return s;
  };
  return side(lhs) + " = " + side(rhs);
}

namespace {

constexpr StateLabel PP{1, 1};
constexpr StateLabel PM{1, -1};
constexpr StateLabel MP{-1, 1};
constexpr StateLabel MM{-1, -1};

Sym X1(StateLabel s) { return {SymKind::X1, s, false}; }
Sym X2(StateLabel s) { return {SymKind::X2, s, false}; }
Sym X3(StateLabel s) { return {SymKind::X3, s, false}; }
Sym X3t(StateLabel s) { return {SymKind::X3tilde, s, false}; }
Sym X3th(StateLabel s) { return {SymKind::X3tilde, s, true}; }
Sym Y1() { return {SymKind::Y1, {}, false}; }
Sym Y3t() { return {SymKind::Y3tilde, {}, false}; }

QScalar qh(int half) { return QScalar::q_half(half); }

// Builds X1(a) X2(b) = q^(q2/2) X2(b) X1(a) + extra.
RelationEntry rel(int idx, StateLabel a, StateLabel b, int q2, std::vector<FormalTerm> extra) {
  RelationEntry r;
  r.index = idx;
  r.a = a;
  r.b = b;
  r.lhs = {{QScalar(1), {X1(a), X2(b)}}};
  r.rhs = {{qh(q2), {X2(b), X1(a)}}};
  for (auto& t : extra) r.rhs.push_back(std::move(t));
  return r;
}

}  // namespace

const std::vector<RelationEntry>& relation_catalog() {
  static const std::vector<RelationEntry> catalog = [] {
    const QScalar C = qdiff();
    std::vector<RelationEntry> v;
    v.push_back(rel(1, PP, PP, 4, {}));
    v.push_back(rel(2, PP, PM, -4, {{qh(-3) * C, {X3(PP)}}}));
    v.push_back(rel(3, PP, MP, -4, {}));
    v.push_back(rel(4, PP, MM, -12, {{qh(-3) * C, {X3(MP)}}}));
    v.push_back(rel(5, PM, PP, 12,
                    {{-qh(7) * C, {X2(PP), Y1()}},
                     {-qh(5) * C * qh(4), {X3t(PP)}},
                     {-qh(5) * C * qh(-4), {X3th(PP)}}}));
    v.push_back(rel(6, PM, PM, 4,
                    {{C, {Y3t()}},
                     {-qh(-1) * C * qh(2), {X3t(PM)}},
                     {-qh(-1) * C, {X2(PM), Y1()}},
                     {qh(-1) * C * qh(-2), {X3(PM)}}}));
    v.push_back(rel(7, PM, MP, 4, {{-qh(-1) * C, {X3th(MP)}}}));
    v.push_back(rel(8, PM, MM, -4, {{qh(-3) * C, {X3(MM)}}}));
    v.push_back(rel(9, MP, PP, 12, {{-qh(5) * C, {X3th(PP)}}}));
    v.push_back(rel(10, MP, PM, 4, {{-qh(1) * C, {X3t(MP)}}}));
    v.push_back(rel(11, MP, MP, 4, {}));
    v.push_back(rel(12, MP, MM, -4, {}));
    v.push_back(rel(13, MM, PP, 20,
                    {{-qh(13) * C * qh(8), {X3(MP)}},
                     {-qh(13) * C * qh(-8), {X3t(PM)}},
                     {-qh(11) * C * qh(6), {X3th(MP)}},
                     {-qh(11) * C * qh(-6), {X3th(PM)}},
                     {-qh(14) * C * (qh(6) + qh(-6)), {Y3t()}}}));
    v.push_back(rel(14, MM, PM, 12,
                    {{-qh(5) * C * qh(2), {X2(MM), Y1()}},
                     {-qh(5) * C * (qh(4) + qh(-4)), {X3t(MM)}}}));
    v.push_back(rel(15, MM, MP, 12, {{-qh(7) * C, {X3th(MM)}}}));
    v.push_back(rel(16, MM, MM, 4, {}));
    // Only the all-(+,+) entry has every symbol with a known image.
    for (auto& r : v) {
      bool known = true;
      for (const auto* side : {&r.lhs, &r.rhs})
        for (const auto& t : *side)
          for (const auto& s : t.word) {
            bool k = (s.kind == SymKind::X1 || s.kind == SymKind::X2 || s.kind == SymKind::X3) &&
                     s.state == PP;
            known = known && (k || s.kind == SymKind::Y1);
          }
      r.verifiable_in_embedding = known;
    }
    return v;
  }();
  return catalog;
}

namespace {

TorusElement image_of(const Sym& s) {
  const auto& E = EmbeddingContext::get();
  switch (s.kind) {
    case SymKind::X1: return E.X1_0_pp;
    case SymKind::X2: return E.X2_0_pp;
    case SymKind::X3: return E.X3_0_pp;
    case SymKind::Y1: return E.y1;
    default: throw ContextError("no image for " + s.str());
  }
}

TorusElement evaluate_side(const std::vector<FormalTerm>& side) {
  const auto& E = EmbeddingContext::get();
  TorusElement acc(E.torus6);
  for (const auto& t : side) {
    TorusElement w(E.torus6, QScalar(1));
    for (const auto& s : t.word) w = w * image_of(s);
    acc += t.coeff * w;
  }
  return acc;
}

TorusElement casimir_combination(const TorusElement& a, const TorusElement& b,
                                 const TorusElement& c) {
  return QScalar::q(2) * (a * a) + QScalar::q(-2) * (b * b) + QScalar::q(2) * (c * c) -
         QScalar::q(1) * (a * b * c);
}

std::string commutes(const TorusElement& a, const TorusElement& b) {
  TorusElement d = a * b - b * a;
  return d.is_zero() ? std::string() : d.str();
}

bool ring_coefficients_only(const TorusElement& a) {
  for (const auto& [u, c] : a.terms())
    for (const auto& [k, r] : c.terms())
      if (k.second != 0 || r.get_den() != 1) return false;
  return true;
}

std::vector<Check> bp_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  struct Triple {
    const char* id;
    const TorusElement* a;
    const TorusElement* b;
    const TorusElement* c;
  };
  for (Triple t : {Triple{"embedding.bp.y1y2", &E.y1, &E.y2, &E.y3},
                   Triple{"embedding.bp.y2y3", &E.y2, &E.y3, &E.y1},
                   Triple{"embedding.bp.y3y1", &E.y3, &E.y1, &E.y2}}) {
    v.push_back({t.id, "cyclic q-commutator [y_i, y_i+1]_q = (q^2 - q^-2) y_i+2 in T^6", [t] {
                   return diff_or_empty(q_commutator(*t.a, *t.b).divide_exact(qdiff()), *t.c);
                 }});
  }
  return v;
}

std::vector<Check> boundary_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  v.push_back({"embedding.boundary.formula",
               "boundary = q y1 y2 y3 - q^2 y1^2 - q^-2 y2^2 - q^2 y3^2 + q^2 + q^-2", [&E] {
                 return diff_or_empty(boundary_from_curves(E.y1, E.y2, E.y3), E.boundary);
               }});
  v.push_back({"embedding.boundary.nine_terms",
               "expanded boundary has nine unit monomials in T^6", [&E] {
                 TorusElement b = boundary_from_curves(E.y1, E.y2, E.y3);
                 if (b.size() != 9) return "expansion has " + std::to_string(b.size()) + " terms";
                 for (const auto& [u, c] : b.terms())
                   if (!c.is_monomial() || c.terms().begin()->second != 1)
                     return "non-unit coefficient " + c.str();
                 return std::string();
               }});
  v.push_back({"embedding.boundary.classical", "boundary formula at q^(1/2) = 1", [&E] {
                 auto shadow = [](const TorusElement& a) {
                   return a.map_coefficients([](const QScalar& c) { return c.subst_q_one(); });
                 };
                 return diff_or_empty(shadow(boundary_from_curves(E.y1, E.y2, E.y3)),
                                      shadow(E.boundary));
               }});
  return v;
}

std::vector<Check> centrality_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  const TorusElement* ys[3] = {&E.y1, &E.y2, &E.y3};
  for (int i = 0; i < 3; ++i) {
    const TorusElement* y = ys[i];
    std::string n = std::to_string(i + 1);
    v.push_back({"embedding.central.casimir_y" + n, "Casimir combination commutes with y" + n,
                 [&E, y] { return commutes(casimir_combination(E.y1, E.y2, E.y3), *y); }});
    v.push_back({"embedding.central.boundary_y" + n, "boundary commutes with y" + n,
                 [&E, y] { return commutes(E.boundary, *y); }});
  }
  return v;
}

std::vector<Check> twist_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  v.push_back({"embedding.twist.up_minushalf_to_half",
               "shift_up(X_{1,-1/2}(+,+)) = X_{1,1/2}(+,+)",
               [&E] { return diff_or_empty(twist_shift_up(E.X1_minushalf_pp), E.X1_half_pp); }});
  v.push_back({"embedding.twist.roundtrip_X1_0", "shift_down(shift_up(q^(1/2) x1)) = q^(1/2) x1",
               [&E] { return diff_or_empty(twist_shift_down(twist_shift_up(E.X1_0_pp)), E.X1_0_pp); }});
  v.push_back({"embedding.twist.up_X1_0_exact", "shift_up(q^(1/2) x1) divides exactly", [&E] {
                 twist_shift_up(E.X1_0_pp);
                 return std::string();
               }});
  v.push_back({"embedding.twist.up_minushalf_to_X1_0",
               "shift_up(X_{1,-1/2}(+,+)) = q^(1/2) x1",
               [&E] { return diff_or_empty(twist_shift_up(E.X1_minushalf_pp), E.X1_0_pp); }});
  v.push_back({"embedding.twist.up_X1_0_to_half", "shift_up(q^(1/2) x1) = X_{1,1/2}(+,+)",
               [&E] { return diff_or_empty(twist_shift_up(E.X1_0_pp), E.X1_half_pp); }});
  v.push_back({"embedding.twist.double_up_minushalf",
               "shift_up(shift_up(X_{1,-1/2}(+,+))) = X_{1,1/2}(+,+)", [&E] {
                 return diff_or_empty(twist_shift_up(twist_shift_up(E.X1_minushalf_pp)),
                                      E.X1_half_pp);
               }});
  v.push_back({"embedding.twist.orbit_inverse",
               "shift_up and shift_down are mutually inverse on the orbit of q^(1/2) x1, |n| <= 2",
               [&E] {
                 std::vector<TorusElement> orbit{E.X1_0_pp};
                 TorusElement up = E.X1_0_pp, down = E.X1_0_pp;
                 for (int n = 0; n < 2; ++n) {
                   up = twist_shift_up(up);
                   down = twist_shift_down(down);
                   orbit.push_back(up);
                   orbit.push_back(down);
                 }
                 for (const auto& a : orbit) {
                   if (twist_shift_down(twist_shift_up(a)) != a) return "down(up(a)) != a for " + a.str();
                   if (twist_shift_up(twist_shift_down(a)) != a) return "up(down(a)) != a for " + a.str();
                 }
                 return std::string();
               }});
  return v;
}

std::vector<Check> misc_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  v.push_back({"embedding.x3_normalization",
               "(q^2 - q^-2)^-1 [q^(1/2) x1, y2]_q = q^(1/2) x3", [] {
                 TorusElement r = x3_commutator_residual();
                 return r.is_zero() ? std::string() : r.str();
               }});
  v.push_back({"embedding.integral_coefficients",
               "constants have coefficients in Z[q^(+-1/2)] without t", [&E] {
                 for (const auto* a : {&E.y1, &E.y2, &E.y3, &E.boundary, &E.X1_0_pp, &E.X2_0_pp,
                                       &E.X3_0_pp, &E.X1_half_pp, &E.X1_minushalf_pp})
                   if (!ring_coefficients_only(*a)) return "offending constant " + a->str();
                 return std::string();
               }});
  for (const auto& r : relation_catalog()) {
    if (!r.verifiable_in_embedding) continue;
    v.push_back({"embedding.catalog.rel" + std::to_string(r.index),
                 "X1-X2 commutation relation " + r.a.str() + r.b.str() + " at k = 0", [r] {
                   return diff_or_empty(evaluate_side(r.lhs), evaluate_side(r.rhs));
                 }});
  }
  v.push_back({"embedding.catalog.coverage",
               "16 X1-X2 relations cataloged; those needing mixed-state images are flagged", [] {
                 const auto& cat = relation_catalog();
                 if (cat.size() != 16) return "catalog has " + std::to_string(cat.size()) + " entries";
                 return std::string();
               }});
  v.push_back({"embedding.boundary_arc_pp",
               "q y1 y2 X3 - q^2 X1 y1 - q^-2 X2 y2 - q^2 X3 y3 - C_+^+ = q^(1/2) x5",
               [&E] {
                 TorusElement lhs = QScalar::q(1) * (E.y1 * E.y2 * E.X3_0_pp) -
                                    QScalar::q(2) * (E.X1_0_pp * E.y1) -
                                    QScalar::q(-2) * (E.X2_0_pp * E.y2) -
                                    QScalar::q(2) * (E.X3_0_pp * E.y3);
                 return diff_or_empty(lhs, E.boundary_arc_pp);
               },
               true});
  return v;
}

}  // namespace

std::vector<Check> embedding_checks() {
  std::vector<Check> v;
  for (auto part : {bp_checks(), boundary_checks(), centrality_checks(), twist_checks(), misc_checks()})
    v.insert(v.end(), part.begin(), part.end());
  return v;
}

VerificationReport verify_bp_in_embedding() { return run_checks("embedding.bp", bp_checks()); }

VerificationReport verify_boundary_formula() {
  return run_checks("embedding.boundary", boundary_checks());
}

VerificationReport verify_relations() {
  std::vector<Check> v;
  for (auto& c : misc_checks())
    if (c.id.rfind("embedding.catalog", 0) == 0) v.push_back(std::move(c));
  return run_checks("embedding.catalog", v);
}

}  // namespace skein
