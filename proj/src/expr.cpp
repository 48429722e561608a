#include "skein/expr.hpp"

#include <cctype>
#include <optional>

#include "skein/statedtorus.hpp"

namespace skein {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Number, Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == 'v' && i + 5 < s.size() && s[i + 1] == '(' && (s[i + 2] == '+' || s[i + 2] == '-') &&
               s[i + 3] == ',' && (s[i + 4] == '+' || s[i + 4] == '-') && s[i + 5] == ')') {
      out.push_back({Tok::Ident, std::string(s.substr(i, 6)), i});
      i += 6;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '~')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()[],_{}").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

NodePtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

NodePtr negate(NodePtr a) {
  ExprNode n;
    n.kind = ExprNode::Kind::Negate;
  n.kids = {std::move(a)};
  return make(std::move(n));
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  NodePtr parse() {
    NodePtr e = sum();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  bool is(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
  void expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    ++i_;
  }

  NodePtr sum() {
    std::vector<NodePtr> kids{product()};
    while (is("+") || is("-")) {
      const bool minus = is("-");
      ++i_;
      NodePtr k = product();
      kids.push_back(minus ? negate(k) : k);
    }
    if (kids.size() == 1) return kids[0];
    ExprNode n;
    n.kind = ExprNode::Kind::Sum;
    n.kids = std::move(kids);
    return make(std::move(n));
  }

  bool starts_atom() const {
    return peek().kind == Tok::Number || peek().kind == Tok::Ident || is("(") || is("[");
  }

  NodePtr product() {
    std::vector<NodePtr> kids{unary()};
    for (;;) {
      if (is("*")) {
        ++i_;
        kids.push_back(unary());
      } else if (is("/")) {
        ++i_;
        NodePtr den = unary();
        ExprNode q;
    q.kind = ExprNode::Kind::Quotient;
        q.kids = {collapse(std::move(kids)), den};
        kids = {make(std::move(q))};
      } else if (starts_atom()) {
        kids.push_back(unary());
      } else {
        break;
      }
    }
    return collapse(std::move(kids));
  }

  static NodePtr collapse(std::vector<NodePtr> kids) {
    if (kids.size() == 1) return kids[0];
    ExprNode n;
    n.kind = ExprNode::Kind::Product;
    n.kids = std::move(kids);
    return make(std::move(n));
  }

  NodePtr unary() {
    if (is("-")) {
      ++i_;
      return negate(unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!is("^")) return base;
    ++i_;
    ExprNode n;
    n.kind = ExprNode::Kind::Power;
    n.kids = {base};
    if (is("(")) {
      ++i_;
      n.exp_num = signed_int();
      if (is("/")) {
        ++i_;
        int den = unsigned_int();
        if (den != 1 && den != 2) fail("exponent denominators must be 1 or 2");
        n.exp_den = den;
        if (den == 2 && n.exp_num % 2 == 0) {
          n.exp_num /= 2;
          n.exp_den = 1;
        }
      }
      expect(")");
    } else {
      n.exp_num = signed_int();
    }
    return make(std::move(n));
  }

  int unsigned_int() {
    if (peek().kind != Tok::Number) fail("expected an integer");
    if (peek().text.size() > 6) fail("exponent too large");
    int v = std::stoi(peek().text);
    ++i_;
    return v;
  }

  int signed_int() {
    if (is("-")) {
      ++i_;
      return -unsigned_int();
    }
    return unsigned_int();
  }

  NodePtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ExprNode n;
    n.kind = ExprNode::Kind::Number;
      n.number = Rational(t.text);
      ++i_;
      return make(std::move(n));
    }
    if (t.kind == Tok::Ident) {
      ExprNode n;
    n.kind = ExprNode::Kind::Symbol;
      n.name = t.text;
      ++i_;
      return make(std::move(n));
    }
    if (is("(")) {
      ++i_;
      NodePtr e = sum();
      expect(")");
      return e;
    }
    if (is("[")) {
      ++i_;
      NodePtr a = sum();
      expect(",");
      NodePtr b = sum();
      expect("]");
      ExprNode n;
    n.kind = ExprNode::Kind::Bracket;
      n.kids = {a, b};
      n.dir = bracket_suffix();
      return make(std::move(n));
    }
    fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  // "_q", "_{q}", "_{q^-1}" or "_{q^(-1)}"
  int bracket_suffix() {
    expect("_");
    if (peek().kind == Tok::Ident && peek().text == "q") {
      ++i_;
      return 1;
    }
    expect("{");
    if (!(peek().kind == Tok::Ident && peek().text == "q")) fail("expected q in bracket subscript");
    ++i_;
    int dir = 1;
    if (is("^")) {
      ++i_;
      int e;
      if (is("(")) {
        ++i_;
        e = signed_int();
        expect(")");
      } else {
        e = signed_int();
      }
      if (e != 1 && e != -1) fail("bracket subscript must be q or q^-1");
      dir = e;
    }
    expect("}");
    return dir;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

bool is_atomic(const ExprNode& n) {
  return n.kind == ExprNode::Kind::Number || n.kind == ExprNode::Kind::Symbol ||
         n.kind == ExprNode::Kind::Bracket;
}

std::string render(const ExprNode& n);

std::string wrapped(const ExprNode& n, bool wrap) { return wrap ? "(" + render(n) + ")" : render(n); }

std::string render(const ExprNode& n) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Number: return n.number.get_str();
    case K::Symbol: return n.name;
    case K::Sum: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        const ExprNode& k = *n.kids[i];
        if (i == 0) {
          s = render(k);
        } else if (k.kind == K::Negate) {
          s += " - " + wrapped(*k.kids[0], k.kids[0]->kind == K::Sum || k.kids[0]->kind == K::Negate);
        } else {
          s += " + " + render(k);
        }
      }
      return s;
    }
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        const ExprNode& k = *n.kids[i];
        bool wrap = k.kind == K::Sum || (i > 0 && (k.kind == K::Negate || k.kind == K::Quotient));
        s += (i ? "*" : "") + wrapped(k, wrap);
      }
      return s;
    }
    case K::Quotient: {
      const ExprNode& a = *n.kids[0];
      const ExprNode& b = *n.kids[1];
      return wrapped(a, a.kind == K::Sum) + "/" + wrapped(b, !(is_atomic(b) || b.kind == K::Power));
    }
    case K::Negate: {
      const ExprNode& a = *n.kids[0];
      return "-" + wrapped(a, a.kind == K::Sum || a.kind == K::Negate);
    }
    case K::Power: {
      const ExprNode& a = *n.kids[0];
      std::string e;
      if (n.exp_den == 2) {
        e = "(" + std::to_string(n.exp_num) + "/2)";
      } else if (n.exp_num < 0) {
        e = "(" + std::to_string(n.exp_num) + ")";
      } else {
        e = std::to_string(n.exp_num);
      }
      return wrapped(a, !is_atomic(a)) + "^" + e;
    }
    case K::Bracket:
      return "[" + render(*n.kids[0]) + ", " + render(*n.kids[1]) + "]" + (n.dir > 0 ? "_q" : "_{q^-1}");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Evaluation

QFraction fraction_pow(const QFraction& a, int n) {
  QFraction r(1);
  const QFraction base = n < 0 ? QFraction(1) / a : a;
  for (int i = 0; i < std::abs(n); ++i) r *= base;
  return r;
}

QScalar require_polynomial(const QFraction& f) {
  if (!f.is_polynomial()) throw DivisionError("coefficient " + f.str() + " is not a Laurent polynomial");
  return f.num();
}

template <class Traits>
class Evaluator {
public:
  using V = typename Traits::Value;

  struct Val {
    std::optional<QFraction> s;
    std::optional<V> v;
  };

  explicit Evaluator(Traits traits) : t_(std::move(traits)) {}

  V evaluate(const NodePtr& e) {
    Val r = eval(*e);
    return r.v ? *r.v : t_.from_scalar(*r.s);
  }

  QFraction evaluate_scalar(const NodePtr& e) {
    Val r = eval(*e);
    if (r.v) throw std::invalid_argument("expression is not a scalar");
    return *r.s;
  }

private:
  static Val scalar(QFraction s) { return {std::move(s), std::nullopt}; }
  static Val element(V v) { return {std::nullopt, std::move(v)}; }

  V as_element(const Val& a) { return a.v ? *a.v : t_.from_scalar(*a.s); }

  Val add(const Val& a, const Val& b) {
    if (a.s && b.s) return scalar(*a.s + *b.s);
    return element(t_.add(as_element(a), as_element(b)));
  }

  Val mul(const Val& a, const Val& b) {
    if (a.s && b.s) return scalar(*a.s * *b.s);
    if (a.s) return element(t_.scale(*b.v, *a.s));
    if (b.s) return element(t_.scale(*a.v, *b.s));
    return element(t_.mul(*a.v, *b.v));
  }

  Val eval(const ExprNode& n) {
    using K = ExprNode::Kind;
    switch (n.kind) {
      case K::Number: return scalar(QFraction(QScalar(n.number)));
      case K::Symbol: {
        if (n.name == "q") return scalar(QFraction(QScalar::q(1)));
        if (n.name == "t") return scalar(QFraction(QScalar::t(1)));
        return element(t_.symbol(n.name, 1));
      }
      case K::Sum: {
        Val acc = eval(*n.kids[0]);
        for (std::size_t i = 1; i < n.kids.size(); ++i) acc = add(acc, eval(*n.kids[i]));
        return acc;
      }
      case K::Product: {
        Val acc = eval(*n.kids[0]);
        for (std::size_t i = 1; i < n.kids.size(); ++i) acc = mul(acc, eval(*n.kids[i]));
        return acc;
      }
      case K::Quotient: {
        Val a = eval(*n.kids[0]);
        Val b = eval(*n.kids[1]);
        if (b.v) throw std::invalid_argument("division is only by scalars");
        if (b.s->is_zero()) throw DivisionError("division by zero");
        if (a.s) return scalar(*a.s / *b.s);
        return element(t_.scale(*a.v, QFraction(1) / *b.s));
      }
      case K::Negate: {
        Val a = eval(*n.kids[0]);
        return mul(scalar(QFraction(-1)), a);
      }
      case K::Power: {
        const ExprNode& base = *n.kids[0];
        if (n.exp_den == 2) {
          if (!(base.kind == K::Symbol && base.name == "q"))
            throw std::invalid_argument("half-integer exponents are only allowed on q");
          return scalar(QFraction(QScalar::q_half(n.exp_num)));
        }
        if (base.kind == K::Symbol && base.name != "q" && base.name != "t")
          return element(t_.symbol(base.name, n.exp_num));
        Val a = eval(base);
        if (a.s) return scalar(fraction_pow(*a.s, n.exp_num));
        return element(t_.pow(*a.v, n.exp_num));
      }
      case K::Bracket: {
        Val a = eval(*n.kids[0]);
        Val b = eval(*n.kids[1]);
        const QFraction qa(QScalar::q(n.dir)), qb(QScalar::q(-n.dir));
        Val left = mul(scalar(qa), mul(a, b));
        Val right = mul(scalar(-qb), mul(b, a));
        return add(left, right);
      }
    }
    throw std::logic_error("unhandled expression node");
  }

  Traits t_;
};

template <class V>
V repeated_pow(V base, int n, V one, V (*mul)(const V&, const V&)) {
  if (n < 0) throw std::invalid_argument("negative powers need a monomial");
  V r = std::move(one);
  for (int i = 0; i < n; ++i) r = mul(r, base);
  return r;
}

struct TorusTraits {
  using Value = TorusElement;
  TorusPtr ctx;
  bool embedding_names = false;

  Value from_scalar(const QFraction& s) const { return TorusElement(ctx, require_polynomial(s)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const QFraction& s) const {
    return (a * s.num()).divide_exact(s.den());
  }
  Value pow(const Value& a, int n) const { return a.pow(n); }
  Value symbol(const std::string& name, int power) const {
    const auto& names = ctx->names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return TorusElement::generator(ctx, static_cast<int>(i), power);
    if (embedding_names) {
      try {
        return EmbeddingContext::get().named(name).pow(power);
      } catch (const ContextError&) {
      }
    }
    throw UnknownSymbolError("unknown symbol '" + name + "'");
  }
};

struct DahaTraits {
  using Value = DahaElement;
  Value from_scalar(const QFraction& s) const { return DahaElement(s); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const QFraction& s) const { return s * a; }
  Value pow(const Value& a, int n) const {
    if (n < 0) throw std::invalid_argument("negative powers are only supported on X, Y and T");
    return a.pow(n);
  }
  Value symbol(const std::string& name, int power) const {
    if (name == "X") return daha::X(power);
    if (name == "Y") return daha::Y(power);
    if (name == "T") return daha::T_pow(power);
    if (name == "e") return pow(daha::spherical_idempotent(), power);
    throw UnknownSymbolError("unknown symbol '" + name + "'");
  }
};

struct VTraits {
  using Value = VElement;
  Value from_scalar(const QFraction& s) const { return VElement(require_polynomial(s)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return v_mul(a, b); }
  Value scale(const Value& a, const QFraction& s) const {
    auto r = (a * s.num()).divide_exact(s.den());
    if (!r) throw DivisionError("inexact division of a v-element");
    return *r;
  }
  Value pow(const Value& a, int n) const { return repeated_pow<VElement>(a, n, VElement(QScalar(1)), &v_mul); }
  Value symbol(const std::string& name, int power) const {
    static const std::map<std::string, int> names{
        {"v(+,+)", VPP}, {"v(+,-)", VPM}, {"v(-,+)", VMP}, {"v(-,-)", VMM},
        {"vpp", VPP},    {"vpm", VPM},    {"vmp", VMP},    {"vmm", VMM}};
    auto it = names.find(name);
    if (it == names.end()) throw UnknownSymbolError("unknown symbol '" + name + "'");
    return pow(VElement::generator(it->second), power);
  }
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

struct LaurentTraits {
  using Value = LaurentPoly;
  Value from_scalar(const QFraction& s) const { return LaurentPoly::constant(4, require_polynomial(s)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const QFraction& s) const {
    LaurentPoly r(4);
    for (const auto& [e, c] : a.terms()) r.add_term(e, divide_or_throw(c * s.num(), s.den()));
    return r;
  }
  Value pow(const Value& a, int n) const {
    if (n >= 0) return repeated_pow<LaurentPoly>(a, n, LaurentPoly::constant(4, 1), &laurent_mul);
    if (a.size() != 1) throw std::invalid_argument("negative powers need a monomial");
    const auto& [e, c] = *a.terms().begin();
    auto inv = c.monomial_inverse();
    if (!inv) throw DivisionError("coefficient is not a unit");
    IntVec ne(e);
    for (auto& x : ne) x = -x;
    return repeated_pow<LaurentPoly>(LaurentPoly::monomial(ne, *inv), -n, LaurentPoly::constant(4, 1),
                                     &laurent_mul);
  }
  Value symbol(const std::string& name, int power) const {
    static const std::map<std::string, int> names{{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}};
    auto it = names.find(name);
    if (it == names.end()) throw UnknownSymbolError("unknown symbol '" + name + "'");
    IntVec e(4, 0);
    e[it->second] = power;
    return LaurentPoly::monomial(e);
  }
};

struct ScalarTraits {
  using Value = QFraction;
  Value from_scalar(const QFraction& s) const { return s; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const QFraction& s) const { return a * s; }
  Value pow(const Value& a, int n) const { return fraction_pow(a, n); }
  Value symbol(const std::string& name, int) const {
    throw UnknownSymbolError("unknown symbol '" + name + "'");
  }
};

}  // namespace

NodePtr parse_expression(std::string_view src) { return Parser(src).parse(); }

std::string render_expression(const NodePtr& e) { return render(*e); }

TorusElement eval_rank2(const NodePtr& e) { return Evaluator<TorusTraits>({rank2_torus(), false}).evaluate(e); }

TorusElement eval_torus6(const NodePtr& e) {
  return Evaluator<TorusTraits>({EmbeddingContext::get().torus6, true}).evaluate(e);
}

DahaElement eval_daha(const NodePtr& e) { return Evaluator<DahaTraits>({}).evaluate(e); }

VElement eval_v(const NodePtr& e) { return Evaluator<VTraits>({}).evaluate(e); }

LaurentPoly eval_laurent(const NodePtr& e) { return Evaluator<LaurentTraits>({}).evaluate(e); }

QFraction eval_scalar(const NodePtr& e) { return Evaluator<ScalarTraits>({}).evaluate_scalar(e); }

}  // namespace skein
