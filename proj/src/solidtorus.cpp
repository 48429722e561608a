#include "skein/solidtorus.hpp"

#include <mutex>
#include <random>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "skein/statedtorus.hpp"

namespace skein {

VElement::VElement(const QScalar& c) { add_term({0, 0, 0, 0}, c); }

VElement VElement::generator(int g) {
  VMonomial m{0, 0, 0, 0};
  m.at(g) = 1;
  return monomial(m);
}

VElement VElement::monomial(const VMonomial& m, const QScalar& c) {
  VElement r;
  r.add_term(m, c);
  return r;
}

QScalar VElement::coeff(const VMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

void VElement::add_term(const VMonomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

VElement& VElement::operator+=(const VElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VElement& VElement::operator-=(const VElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VElement& VElement::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

VElement VElement::operator-() const { return *this * QScalar(-1); }

std::optional<VElement> VElement::divide_exact(const QScalar& d) const {
  VElement r;
  for (const auto& [m, c] : terms_) {
    auto quot = exact_divide(c, d);
    if (!quot) return std::nullopt;
    r.add_term(m, *quot);
  }
  return r;
}

std::string vgen_name(int g) {
  static const char* names[4] = {"v(+,+)", "v(+,-)", "v(-,+)", "v(-,-)"};
  return names[g];
}

VWord monomial_word(const VMonomial& m) {
  VWord w;
  for (int g = 0; g < 4; ++g) w.insert(w.end(), m[g], g);
  return w;
}

std::string VElement::str() const {
  std::map<std::vector<int>, QScalar> terms;
  for (const auto& [m, c] : terms_) terms.emplace(std::vector<int>(m.begin(), m.end()), c);
  return render_terms(terms, {vgen_name(0), vgen_name(1), vgen_name(2), vgen_name(3)});
}

QScalar state_constant(int g) {
  switch (g) {
    case VPM: return -QScalar::q_half(-5);
    case VMP: return QScalar::q_half(-1);
    default: return QScalar();
  }
}

const std::vector<VRule>& v_rules() {
  static const std::vector<VRule> rules = [] {
    const QScalar C = qdiff();
    std::vector<VRule> r;
    r.push_back({VMM, VPP,
                 {{QScalar::q(8), {VPP, VMM}},
                  {QScalar::q(8) * C, {VMP, VMP}},
                  {-QScalar::q(6) * C, {VMP, VPM}},
                  {-QScalar::q(5) * (QScalar::q(4) - QScalar::q(-4)), {}}}});
    r.push_back({VMP, VPM, {{QScalar(1), {VPM, VMP}}}});
    r.push_back({VMM, VMP, {{QScalar::q(4), {VMP, VMM}}}});
    r.push_back({VMM, VPM, {{QScalar(1), {VPM, VMM}}, {QScalar::q(4) * C, {VMM, VMP}}}});
    r.push_back({VMP, VPP, {{QScalar::q(4), {VPP, VMP}}}});
    r.push_back({VPM, VPP, {{QScalar(1), {VPP, VPM}}, {QScalar::q(4) * C, {VPP, VMP}}}});
    return r;
  }();
  return rules;
}

namespace {

const VRule& rule_for(int left, int right) {
  for (const auto& r : v_rules())
    if (r.left == left && r.right == right) return r;
  throw std::logic_error("no rewrite rule for an out-of-order pair");
}

class WordMemo {
public:
  std::optional<VElement> find(const VWord& w) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const VWord& w, const VElement& v) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(w, v);
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<VWord, VElement> table_;
};

WordMemo& word_memo() {
  static WordMemo m;
  return m;
}

VElement normal_form(const VWord& w, int depth) {
  if (depth > 400) throw std::runtime_error("v-word rewriting did not terminate");
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
  if (i + 1 >= w.size()) {
    VMonomial m{0, 0, 0, 0};
    for (int g : w) ++m[g];
    return VElement::monomial(m);
  }
  if (auto hit = word_memo().find(w)) return *hit;
  VElement r;
  for (const auto& [c, rhs] : rule_for(w[i], w[i + 1]).rhs) {
    VWord next(w.begin(), w.begin() + static_cast<long>(i));
    next.insert(next.end(), rhs.begin(), rhs.end());
    next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    r += c * normal_form(next, depth + 1);
  }
  word_memo().store(w, r);
  return r;
}

}  // namespace

VElement v_normal_form(const VWord& word) {
  for (int g : word)
    if (g < 0 || g > 3) throw std::out_of_range("v generator index must lie in 0..3");
  return normal_form(word, 0);
}

VElement v_mul(const VElement& a, const VElement& b) {
  VElement r;
  for (const auto& [u, cu] : a.terms()) {
    VWord wu = monomial_word(u);
    for (const auto& [v, cv] : b.terms()) {
      VWord w = wu;
      VWord wv = monomial_word(v);
      w.insert(w.end(), wv.begin(), wv.end());
      r += (cu * cv) * v_normal_form(w);
    }
  }
  return r;
}

VElement core_curve() {
  return QScalar::q_half(1) * VElement::generator(VPM) - QScalar::q_half(5) * VElement::generator(VMP);
}

namespace action_table {

VElement x1(int g, const VElement& f) { return v_mul(VElement::generator(g), f); }
VElement x2_on_one(int g) { return VElement(state_constant(g)); }
VElement x3_on_one(int g) { return -QScalar::q(-3) * VElement::generator(g); }
VElement y1(const VElement& f) { return v_mul(core_curve(), f); }
VElement y2_on_one() { return VElement(-QScalar::q(2) - QScalar::q(-2)); }
VElement y2_on_generator(int g) { return (-QScalar::q(4) - QScalar::q(-4)) * VElement::generator(g); }
VElement y3_on_one() { return -QScalar::q(-3) * core_curve(); }
VElement boundary_on_one() { return VElement(-QScalar::q(2) - QScalar::q(-2)); }
VElement boundary_on_generator(int g) {
  return (-QScalar::q(6) - QScalar::q(-6)) * VElement::generator(g) -
         (qdiff() * qdiff() * state_constant(g)) * core_curve();
}
VElement x2_example() { return (QScalar::q_half(-5) * qdiff()) * VElement::generator(VMM); }

}  // namespace action_table

// ---------------------------------------------------------------------------
// Consistency of the catalog with the action table.

namespace {

const char* state_name(int g) {
  static const char* names[4] = {"(+,+)", "(+,-)", "(-,+)", "(-,-)"};
  return names[g];
}

int state_index(const StateLabel& s) { return (s.mu > 0 ? 0 : 2) + (s.nu > 0 ? 0 : 1); }

// Unknown layout: 16 values X2(b) v_a, then X3~(s) 1, X3~[k-1/2](s) 1, Y3~ 1.
constexpr int kX2 = 0;
constexpr int kX3t = 16;
constexpr int kX3th = 20;
constexpr int kY3t = 24;
constexpr int kUnknowns = 25;

std::vector<std::string> unknown_names() {
  std::vector<std::string> n;
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) n.push_back(x2_unknown_name(b, a));
  for (int s = 0; s < 4; ++s) n.push_back(std::string("X3~") + state_name(s) + " 1");
  for (int s = 0; s < 4; ++s) n.push_back(std::string("X3~[-1/2]") + state_name(s) + " 1");
  n.push_back("Y3~ 1");
  return n;
}

// A known element plus a scalar combination of unknown elements.
struct Linear {
  VElement known;
  std::map<int, QScalar> coeffs;

  bool pure() const { return coeffs.empty(); }
  void add(const Linear& o, const QScalar& c) {
    known += c * o.known;
    for (const auto& [u, v] : o.coeffs) {
      QScalar& slot = coeffs[u];
      slot += c * v;
      if (slot.is_zero()) coeffs.erase(u);
    }
  }
};

Linear x2_on(int b, const VElement& f) {
  Linear r;
  for (const auto& [m, c] : f.terms()) {
    int deg = m[0] + m[1] + m[2] + m[3];
    if (deg == 0) {
      r.known += c * action_table::x2_on_one(b);
    } else if (deg == 1) {
      int a = 0;
      while (m[a] == 0) ++a;
      Linear u;
      u.coeffs[kX2 + 4 * b + a] = QScalar(1);
      r.add(u, c);
    } else {
      throw std::logic_error("X2 on a degree >= 2 monomial is outside the catalog's reach");
    }
  }
  return r;
}

Linear act_word(const std::vector<Sym>& word) {
  Linear state;
  state.known = VElement(QScalar(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Sym& s = *it;
    const int g = state_index(s.state);
    const bool on_one = state.pure() && state.known == VElement(QScalar(1));
    auto unknown = [&](int idx) {
      if (!on_one) throw std::logic_error(s.str() + " applied to something other than the empty link");
      Linear r;
      r.coeffs[idx] = QScalar(1);
      return r;
    };
    switch (s.kind) {
      case SymKind::X1:
        if (!state.pure()) throw std::logic_error("X1 applied to an undetermined value");
        state.known = action_table::x1(g, state.known);
        break;
      case SymKind::X2:
        if (!state.pure()) throw std::logic_error("X2 applied to an undetermined value");
        state = x2_on(g, state.known);
        break;
      case SymKind::X3:
        if (!on_one) throw std::logic_error("X3 applied to something other than the empty link");
        state.known = action_table::x3_on_one(g);
        break;
      case SymKind::Y1:
        if (!state.pure()) throw std::logic_error("Y1 applied to an undetermined value");
        state.known = action_table::y1(state.known);
        break;
      case SymKind::X3tilde: state = unknown((s.half_back ? kX3th : kX3t) + g); break;
      case SymKind::Y3tilde: state = unknown(kY3t); break;
    }
  }
  return state;
}

// sum coeffs[u] * value(u) = rhs
struct Equation {
  std::map<int, QScalar> coeffs;
  VElement rhs;
  std::set<std::string> sources;
};

Equation make_equation(const Linear& lhs, const Linear& rhs, std::string source) {
  Linear d = lhs;
  d.add(rhs, QScalar(-1));
  Equation e;
  e.coeffs = d.coeffs;
  e.rhs = -d.known;
  e.sources.insert(std::move(source));
  return e;
}

Linear evaluate_side(const std::vector<FormalTerm>& side) {
  Linear acc;
  for (const auto& t : side) acc.add(act_word(t.word), t.coeff);
  return acc;
}

std::vector<Equation> build_equations() {
  std::vector<Equation> eqs;
  for (const auto& r : relation_catalog())
    eqs.push_back(make_equation(evaluate_side(r.lhs), evaluate_side(r.rhs),
                                "relation " + r.a.str() + r.b.str()));
  // Y2 = q^(1/2) X2(+,-) - q^(5/2) X2(-,+) on each generator.
  for (int a = 0; a < 4; ++a) {
    Linear lhs;
    lhs.known = action_table::y2_on_generator(a);
    Linear rhs;
    rhs.coeffs[kX2 + 4 * VPM + a] = QScalar::q_half(1);
    rhs.coeffs[kX2 + 4 * VMP + a] = -QScalar::q_half(5);
    eqs.push_back(make_equation(lhs, rhs, std::string("Y2 on ") + vgen_name(a)));
  }
  // The tilde curve is the same combination of tilde arcs, at both twists.
  for (int base : {kX3t, kX3th}) {
    Linear lhs;
    lhs.coeffs[kY3t] = QScalar(1);
    Linear rhs;
    rhs.coeffs[base + VPM] = QScalar::q_half(1);
    rhs.coeffs[base + VMP] = -QScalar::q_half(5);
    eqs.push_back(make_equation(lhs, rhs, base == kX3t ? "Y3~ as tilde arcs" : "Y3~ as tilde arcs at -1/2"));
  }
  return eqs;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : "; ") + x;
  return out;
}

}  // namespace

std::string x2_unknown_name(int b, int a) {
  return std::string("X2") + state_name(b) + " " + vgen_name(a);
}

std::optional<VElement> ConsistencyResult::value(const std::string& name) const {
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (unknowns[i] == name) return values[i];
  throw std::out_of_range("no unknown named " + name);
}

std::string ConsistencyResult::str() const {
  std::ostringstream os;
  std::size_t solved = 0;
  for (const auto& v : values) solved += v.has_value();
  os << equations << " equations, " << solved << "/" << unknowns.size() << " unknowns determined\n";
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    os << "  " << unknowns[i] << " = ";
    if (values[i]) {
      os << values[i]->str() << "   [" << derived_from[i] << "]\n";
    } else {
      os << "(free)\n";
    }
  }
  for (const auto& c : contradictions) os << "  contradiction: " << c << "\n";
  return os.str();
}

ConsistencyResult relation_action_consistency() {
  ConsistencyResult res;
  res.unknowns = unknown_names();
  res.values.assign(kUnknowns, std::nullopt);
  res.derived_from.assign(kUnknowns, "");
  std::vector<Equation> pool = build_equations();
  res.equations = pool.size();
  std::vector<bool> pivoted(pool.size(), false);
  std::vector<std::set<std::string>> origin(kUnknowns);

  auto substitute = [&](Equation& e) {
    for (auto it = e.coeffs.begin(); it != e.coeffs.end();) {
      if (res.values[it->first]) {
        e.rhs -= it->second * *res.values[it->first];
        e.sources.insert(origin[it->first].begin(), origin[it->first].end());
        it = e.coeffs.erase(it);
      } else {
        ++it;
      }
    }
  };

  std::vector<bool> alive(pool.size(), true);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!alive[i]) continue;
      Equation& e = pool[i];
      substitute(e);
      if (e.coeffs.empty()) {
        if (!e.rhs.is_zero()) res.contradictions.push_back(join(e.sources) + ": 0 = " + e.rhs.str());
        alive[i] = false;
        continue;
      }
      if (e.coeffs.size() == 1) {
        auto [u, c] = *e.coeffs.begin();
        auto v = e.rhs.divide_exact(c);
        alive[i] = false;
        if (!v) {
          res.contradictions.push_back(join(e.sources) + ": " + res.unknowns[u] + " would be (" +
                                       e.rhs.str() + ")/(" + c.str() + "), not a Laurent element");
          continue;
        }
        res.values[u] = *v;
        origin[u] = e.sources;
        res.derived_from[u] = join(e.sources);
        changed = true;
      }
    }
    if (changed) continue;
    // Fraction-free elimination step on the first equation not yet used as a pivot.
    std::size_t p = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (alive[i] && !pivoted[i] && pool[i].coeffs.size() >= 2) {
        p = i;
        break;
      }
    if (p == pool.size()) break;
    pivoted[p] = true;
    auto [u, pc] = *pool[p].coeffs.begin();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i == p || !alive[i]) continue;
      auto it = pool[i].coeffs.find(u);
      if (it == pool[i].coeffs.end()) continue;
      QScalar c = it->second;
      Equation& e = pool[i];
      for (auto& [w, v] : e.coeffs) v *= pc;
      e.rhs *= pc;
      for (const auto& [w, v] : pool[p].coeffs) {
        QScalar& slot = e.coeffs[w];
        slot -= c * v;
        if (slot.is_zero()) e.coeffs.erase(w);
      }
      e.rhs -= c * pool[p].rhs;
      e.sources.insert(pool[p].sources.begin(), pool[p].sources.end());
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Checks.

namespace {

std::string diff_or_empty(const VElement& a, const VElement& b) {
  return a == b ? std::string() : (a - b).str();
}

std::string word_str(const VWord& w) {
  std::string s;
  for (int g : w) s += (s.empty() ? "" : " ") + vgen_name(g);
  return s.empty() ? "1" : s;
}

VElement word_element(const std::vector<std::pair<QScalar, VWord>>& terms) {
  VElement r;
  for (const auto& [c, w] : terms) r += c * v_normal_form(w);
  return r;
}

std::string associativity_residual(const std::vector<std::array<VElement, 3>>& triples,
                                   const std::vector<std::string>& labels) {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [a, b, c] = triples[i];
    VElement lhs = v_mul(v_mul(a, b), c), rhs = v_mul(a, v_mul(b, c));
    if (lhs == rhs) continue;
    if (bad++ == 0) first = labels[i] + ": (ab)c - a(bc) = " + (lhs - rhs).str();
  }
  if (bad == 0) return {};
  return std::to_string(bad) + " of " + std::to_string(triples.size()) + " triples differ; first " + first;
}

}  // namespace

std::vector<Check> solidtorus_checks() {
  std::vector<Check> v;
  const QScalar C = qdiff();
  v.push_back({"solidtorus.vmul.examples", "stated products v(-,-)v(-,+), v(+,-)v(-,+), v(-,-)v(+,+)", [C] {
                 VElement a = v_normal_form({VMM, VMP});
                 VElement ea = QScalar::q(4) * VElement::monomial({0, 0, 1, 1});
                 if (!(a == ea)) return "v(-,-)v(-,+) = " + a.str();
                 VElement b = v_normal_form({VPM, VMP});
                 if (!(b == VElement::monomial({0, 1, 1, 0}))) return "v(+,-)v(-,+) = " + b.str();
                 VElement c = v_normal_form({VMM, VPP});
                 VElement ec = QScalar::q(8) * VElement::monomial({1, 0, 0, 1}) +
                               (QScalar::q(8) * C) * VElement::monomial({0, 0, 2, 0}) -
                               (QScalar::q(6) * C) * VElement::monomial({0, 1, 1, 0}) -
                               VElement(QScalar::q(5) * (QScalar::q(4) - QScalar::q(-4)));
                 return diff_or_empty(c, ec);
               }});
  v.push_back({"solidtorus.rewrite_fixpoints", "each of the six v-relations holds between normal forms", [] {
                 for (const auto& r : v_rules()) {
                   VElement lhs = v_normal_form({r.left, r.right}), rhs = word_element(r.rhs);
                   if (!(lhs == rhs)) return word_str({r.left, r.right}) + ": " + (lhs - rhs).str();
                 }
                 return std::string();
               }});
  v.push_back({"solidtorus.termination_witness",
               "every degree <= 4 word rewrites to ordered monomials of no larger degree", [] {
                 for (int len = 0; len <= 4; ++len) {
                   std::size_t count = 1;
                   for (int i = 0; i < len; ++i) count *= 4;
                   for (std::size_t code = 0; code < count; ++code) {
                     VWord w;
                     for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(len); ++i, c /= 4)
                       w.push_back(static_cast<int>(c % 4));
                     VElement nf = v_normal_form(w);
                     for (const auto& [m, c] : nf.terms())
                       if (m[0] + m[1] + m[2] + m[3] > len) return word_str(w) + " grew in degree";
                   }
                 }
                 return std::string();
               }});
  v.push_back({"solidtorus.associativity.degree3", "(ab)c = a(bc) for all generator triples", [] {
                 std::vector<std::array<VElement, 3>> triples;
                 std::vector<std::string> labels;
                 for (int a = 0; a < 4; ++a)
                   for (int b = 0; b < 4; ++b)
                     for (int c = 0; c < 4; ++c) {
                       triples.push_back({VElement::generator(a), VElement::generator(b), VElement::generator(c)});
                       labels.push_back(word_str({a, b, c}));
                     }
                 return associativity_residual(triples, labels);
               }});
  v.push_back({"solidtorus.associativity.random", "(ab)c = a(bc) on random monomial triples of total degree <= 4",
               [] {
                 std::mt19937 rng(5);
                 std::uniform_int_distribution<int> gen(0, 3), len(0, 3);
                 std::vector<std::array<VElement, 3>> triples;
                 std::vector<std::string> labels;
                 for (int t = 0; t < 300; ++t) {
                   std::array<VWord, 3> ws;
                   int budget = 4;
                   for (auto& w : ws) {
                     int l = std::min(len(rng), budget);
                     budget -= l;
                     for (int i = 0; i < l; ++i) w.push_back(gen(rng));
                   }
                   triples.push_back({v_normal_form(ws[0]), v_normal_form(ws[1]), v_normal_form(ws[2])});
                   labels.push_back("[" + word_str(ws[0]) + "][" + word_str(ws[1]) + "][" + word_str(ws[2]) + "]");
                 }
                 return associativity_residual(triples, labels);
               }});
  v.push_back({"solidtorus.determined.i", "q^(1/2) C(+,-) - q^(5/2) C(-,+) = -q^2 - q^-2", [] {
                 QScalar lhs = QScalar::q_half(1) * state_constant(VPM) - QScalar::q_half(5) * state_constant(VMP);
                 VElement l(lhs);
                 return diff_or_empty(l, action_table::y2_on_one());
               }});
  v.push_back({"solidtorus.determined.ii", "q^(1/2) X3(+,-) 1 - q^(5/2) X3(-,+) 1 = Y3 1", [] {
                 VElement lhs = QScalar::q_half(1) * action_table::x3_on_one(VPM) -
                                QScalar::q_half(5) * action_table::x3_on_one(VMP);
                 return diff_or_empty(lhs, action_table::y3_on_one());
               }});
  v.push_back({"solidtorus.determined.iii",
               "(q^2 - q^-2)^-1 [X1(s), Y2]_q 1 = X3(s) 1 for all four states", [C] {
                 for (int g = 0; g < 4; ++g) {
                   VElement bracket = QScalar::q(1) * action_table::x1(g, action_table::y2_on_one()) -
                                      QScalar::q(-1) * action_table::y2_on_generator(g);
                   auto lhs = bracket.divide_exact(C);
                   if (!lhs) return std::string("bracket not divisible for ") + vgen_name(g);
                   std::string r = diff_or_empty(*lhs, action_table::x3_on_one(g));
                   if (!r.empty()) return vgen_name(g) + ": " + r;
                 }
                 return std::string();
               }});
  v.push_back({"solidtorus.consistency.contradictions",
               "catalog relations on the empty link admit a common solution for the open actions", [] {
                 auto res = relation_action_consistency();
                 std::string out;
                 for (const auto& c : res.contradictions) out += (out.empty() ? "" : " | ") + c;
                 return out;
               }});
  v.push_back({"solidtorus.consistency.example",
               "X2(-,-) v(+,-) = q^(-5/2)(q^2 - q^-2) v(-,-), derived from the catalog", [] {
                 auto res = relation_action_consistency();
                 auto val = res.value(x2_unknown_name(VMM, VPM));
                 if (!val) return std::string("left undetermined");
                 return diff_or_empty(*val, action_table::x2_example());
               }});
  v.push_back({"solidtorus.consistency.coverage", "every open action is determined by the catalog",
               [] {
                 auto res = relation_action_consistency();
                 std::string free;
                 for (std::size_t i = 0; i < res.unknowns.size(); ++i)
                   if (!res.values[i]) free += (free.empty() ? "" : ", ") + res.unknowns[i];
                 return free.empty() ? free : "undetermined: " + free;
               },
               true});
  return v;
}

}  // namespace skein
