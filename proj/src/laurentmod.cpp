#include "skein/laurentmod.hpp"

#include <random>

#include "skein/statedtorus.hpp"

namespace skein {

namespace {

int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVec negated(IntVec a) {
  for (auto& x : a) x = -x;
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(IntVec e, const QScalar& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(int nvars, const QScalar& c) {
  return monomial(IntVec(nvars, 0), c);
}

QScalar LaurentPoly::coeff(const IntVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QScalar() : it->second;
}

void LaurentPoly::add_term(const IntVec& e, const QScalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ContextError("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw ContextError("Laurent polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw ContextError("Laurent polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw ContextError("Laurent polynomials in different variable counts");
  LaurentPoly r(a.nvars_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) r.add_term(add(u, v), cu * cv);
  return r;
}

std::vector<std::string> LaurentPoly::variable_names() const {
  if (nvars_ == 4) return {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars_; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

std::string LaurentPoly::str() const { return render_terms(terms_, variable_names()); }

ShiftOperator ShiftOperator::identity(int nvars) {
  return {IntVec(nvars, 0), IntVec(nvars, 0), QScalar(1)};
}

ShiftOperator ShiftOperator::with_q_shifts(IntVec multiplier, const IntVec& q_shift) {
  IntVec half(q_shift);
  for (auto& s : half) s *= 2;
  return {std::move(multiplier), std::move(half), QScalar(1)};
}

LaurentPoly ShiftOperator::apply(const LaurentPoly& f) const {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(add(e, multiplier), (c * prefactor).shifted(dot(half_shift, e), 0));
  return r;
}

ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b) {
  return {add(a.multiplier, b.multiplier), add(a.half_shift, b.half_shift),
          (a.prefactor * b.prefactor).shifted(dot(a.half_shift, b.multiplier), 0)};
}

ShiftOperator ShiftOperator::inverse() const {
  auto inv = prefactor.monomial_inverse();
  if (!inv) throw DivisionError("shift operator prefactor is not a unit");
  return {negated(multiplier), negated(half_shift), inv->shifted(dot(half_shift, multiplier), 0)};
}

ShiftOperator ShiftOperator::pow(int n) const {
  ShiftOperator base = n < 0 ? inverse() : *this;
  ShiftOperator r = identity(static_cast<int>(multiplier.size()));
  for (int i = 0; i < std::abs(n); ++i) r = compose(r, base);
  return r;
}

LaurentPoly apply_sum(const std::vector<ShiftOperator>& ops, const LaurentPoly& f) {
  LaurentPoly r(f.nvars());
  for (const auto& op : ops) r += op.apply(f);
  return r;
}

TorusModule::TorusModule(TorusPtr ctx, int nvars, std::vector<ShiftOperator> generators)
    : ctx_(std::move(ctx)), nvars_(nvars), gens_(std::move(generators)) {
  if (static_cast<int>(gens_.size()) != ctx_->n())
    throw ContextError("one shift operator per torus generator is required");
  for (const auto& g : gens_)
    if (static_cast<int>(g.multiplier.size()) != nvars_ || static_cast<int>(g.half_shift.size()) != nvars_)
      throw ContextError("shift operator has wrong variable count");
}

LaurentPoly TorusModule::generator_action(int i, const LaurentPoly& f, int power) const {
  return gens_.at(i).pow(power).apply(f);
}

ShiftOperator TorusModule::monomial_operator(const Monomial& u) const {
  ShiftOperator op = ShiftOperator::identity(nvars_);
  for (int i = 0; i < ctx_->n(); ++i)
    if (u[i] != 0) op = compose(op, gens_[i].pow(u[i]));
  return op;
}

LaurentPoly TorusModule::act(const TorusElement& a, const LaurentPoly& f) const {
  if (a.context() != ctx_ && !(a.context()->matrix() == ctx_->matrix()))
    throw ContextError("element does not live in the module's torus");
  LaurentPoly r(nvars_);
  for (const auto& [u, c] : a.terms()) r += c * monomial_operator(u).apply(f);
  return r;
}

TorusModule proposition_module(const TorusPtr& ctx, int k) {
  const int n = ctx->n();
  const auto& Q = ctx->matrix();
  if (k < 1 || k > n) throw ContextError("k must lie in 1..n");
  auto central = [&](int i) {
    for (int j = 0; j < n; ++j)
      if (Q(i, j) != 0) return false;
    return true;
  };
  for (int i = 0; i < n; ++i) {
    if (i < k && central(i))
      throw ContextError("generator x" + std::to_string(i + 1) + " is central but listed among the first k");
    if (i >= k && !central(i))
      throw ContextError("generator x" + std::to_string(i + 1) + " is not central");
  }
  const int nv = k - 1;
  std::vector<ShiftOperator> gens;
  for (int i = 0; i < n; ++i) {
    ShiftOperator op = ShiftOperator::identity(nv);
    if (i < k - 1) {
      op.multiplier[i] = 1;
      for (int j = 0; j < nv; ++j) op.half_shift[j] = Q(i, j);
    } else if (i == k - 1) {
      for (int j = 0; j < nv; ++j) op.half_shift[j] = 2 * Q(i, j);
    }
    gens.push_back(std::move(op));
  }
  return TorusModule(ctx, nv, std::move(gens));
}

const std::vector<ShiftOperator>& printed_generator_actions() {
  static const std::vector<ShiftOperator> ops{
      ShiftOperator::with_q_shifts({1, 0, 0, 0}, {0, 1, 1, -1}),
      ShiftOperator::with_q_shifts({0, 1, 0, 0}, {-1, 0, -1, -2}),
      ShiftOperator::with_q_shifts({0, 0, 1, 0}, {-1, 1, 0, -1}),
      ShiftOperator::with_q_shifts({0, 0, 0, 1}, {1, 2, 1, 0}),
      ShiftOperator::with_q_shifts({0, 0, 0, 0}, {0, 0, 0, 0}),
      ShiftOperator::with_q_shifts({0, 0, 0, 0}, {4, 4, 4, 4})};
  return ops;
}

const TorusModule& stated_module() {
  static const TorusModule m(EmbeddingContext::get().torus6, 4, printed_generator_actions());
  return m;
}

const std::vector<ShiftOperator>& printed_action(const std::string& name) {
  using S = ShiftOperator;
  static const std::map<std::string, std::vector<ShiftOperator>> table{
      {"y1",
       {S::with_q_shifts({0, 1, -1, 0}, {0, -1, -1, -1}), S::with_q_shifts({0, -1, 1, 0}, {0, 1, 1, 1}),
        S::with_q_shifts({2, 0, -1, -1}, {0, -1, 1, -1}), S::with_q_shifts({1, -1, 0, -1}, {0, -1, 1, 1})}},
      {"y2",
       {S::with_q_shifts({1, 0, -1, 0}, {1, 0, 1, 0}), S::with_q_shifts({-1, 0, 1, 0}, {-1, 0, -1, 0}),
        S::with_q_shifts({-1, 1, -1, 1}, {1, 0, -1, 0})}},
      {"y3",
       {S::with_q_shifts({1, 0, 0, -1}, {-1, -1, 0, -1}), S::with_q_shifts({-1, 0, 0, 1}, {1, 1, 0, 1}),
        S::with_q_shifts({-1, -1, 2, 0}, {-1, 1, 0, 1}), S::with_q_shifts({0, -1, 1, -1}, {-1, -1, 0, 1})}},
      {"boundary",
       {S::with_q_shifts({-1, 0, 1, -1}, {-2, -2, -2, 0}), S::with_q_shifts({-1, -1, 1, 0}, {0, 0, 0, 2}),
        S::with_q_shifts({0, -1, 0, 1}, {2, 2, 2, 2}), S::with_q_shifts({-1, 0, -1, 1}, {2, 0, 0, 2}),
        S::with_q_shifts({0, 1, 0, -1}, {-2, -2, -2, -2}), S::with_q_shifts({-1, 1, -1, 0}, {0, -2, -2, 0}),
        S::with_q_shifts({1, 0, -1, -1}, {0, -2, 0, 0}), S::with_q_shifts({1, -1, -1, 0}, {2, 0, 2, 2}),
        S::with_q_shifts({0, -1, 0, -1}, {0, -2, 0, 2})}}};
  auto it = table.find(name);
  if (it == table.end()) throw ContextError("no printed action named " + name);
  return it->second;
}

LaurentPoly generator_action(int i, const LaurentPoly& f) {
  return stated_module().generator_action(i - 1, f);
}

LaurentPoly element_action(const TorusElement& a, const LaurentPoly& f) {
  return stated_module().act(a, f);
}

const Lattice& boundary_subspace_lattice() {
  static const Lattice L(4, {{1, -1, -1, 0}, {-1, 1, -1, 0}, {-1, -1, 1, 0}, {0, -1, 0, 1}});
  return L;
}

const Lattice& y2_subspace_lattice() {
  static const Lattice L(4, {{1, 0, -1, 0}, {-1, 1, -1, 1}});
  return L;
}

namespace {

std::string exponent_str(const IntVec& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

MembershipReport check_subspace(const Lattice& L, const LaurentPoly& f, const TorusElement& op,
                                const char* what) {
  for (const auto& [e, c] : f.terms())
    if (!L.contains(e))
      throw PreconditionError("monomial " + exponent_str(e) + " lies outside the " + what + " subspace");
  MembershipReport rep;
  rep.image = element_action(op, f);
  for (const auto& [e, c] : rep.image.terms())
    if (!L.contains(e)) rep.outside.push_back(e);
  rep.image_in_subspace = rep.outside.empty();
  return rep;
}

IntVec lattice_point(const Lattice& L, const IntVec& k) {
  IntVec v(L.dim(), 0);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (int j = 0; j < L.dim(); ++j) v[j] += k[i] * L.generators()[i][j];
  return v;
}

}  // namespace

MembershipReport check_invariant_subspace_boundary(const LaurentPoly& f) {
  return check_subspace(boundary_subspace_lattice(), f, EmbeddingContext::get().boundary, "boundary");
}

MembershipReport check_invariant_subspace_y2(const LaurentPoly& f) {
  return check_subspace(y2_subspace_lattice(), f, EmbeddingContext::get().y2, "y2");
}

LaurentPoly y2_subspace_formula(int k1, int k2) {
  const Lattice& L = y2_subspace_lattice();
  LaurentPoly r(4);
  r.add_term(lattice_point(L, {k1 - 1, k2}), QScalar::q(2 * k2));
  r.add_term(lattice_point(L, {k1 + 1, k2}), QScalar::q(-2 * k2));
  r.add_term(lattice_point(L, {k1, k2 + 1}), QScalar::q(2 * k1));
  return r;
}

LaurentPoly boundary_subspace_formula(const IntVec& k) {
  const Lattice& L = boundary_subspace_lattice();
  const int k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
  const int kappa = k1 + k2 + k3 + k4;
  struct Term {
    int qpow;
    IntVec dk;
  };
  const Term terms[] = {{2 * kappa, {0, 0, 1, -1}},
                        {2 * k4, {0, 0, 1, 0}},
                        {2 * (kappa - k4), {0, 0, 0, -1}},
                        {-2 * (kappa - k4), {0, 0, 0, 1}},
                        {2 * (kappa - 2 * k2 + k4), {1, 0, 1, -1}},
                        {2 * (kappa - 2 * k2), {1, 0, 0, -1}},
                        {2 * (k4 - 2 * k2), {1, 0, 0, 0}},
                        {2 * (2 * k1 + k4), {0, 1, 0, 0}},
                        {2 * (k1 - k2 - k3 + k4), {0, 1, 0, 1}}};
  LaurentPoly r(4);
  for (const auto& t : terms) r.add_term(lattice_point(L, add(k, t.dk)), QScalar::q(t.qpow));
  return r;
}

namespace {

std::vector<IntVec> box(int n, int lo, int hi) {
  std::vector<IntVec> out;
  IntVec e(n, lo);
  for (;;) {
    out.push_back(e);
    int i = 0;
    while (i < n && e[i] == hi) e[i++] = lo;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

QScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), pw(-4, 4);
  QScalar s;
  for (int i = 0; i < 2; ++i) s.add_term(coef(rng), pw(rng), 0);
  return s.is_zero() ? QScalar(1) : s;
}

TorusElement random_element(const TorusPtr& ctx, std::mt19937& rng, int terms, int range) {
  std::uniform_int_distribution<int> ex(-range, range);
  TorusElement a(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial u(ctx->n());
    for (auto& x : u) x = ex(rng);
    a.add_term(u, random_scalar(rng));
  }
  return a;
}

LaurentPoly random_poly(int nvars, std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> ex(-2, 2);
  LaurentPoly f(nvars);
  for (int t = 0; t < terms; ++t) {
    IntVec e(nvars);
    for (auto& x : e) x = ex(rng);
    f.add_term(e, random_scalar(rng));
  }
  return f;
}

std::string relation_residual(const TorusModule& M, std::mt19937& rng) {
  const int n = M.context()->n();
  for (int trial = 0; trial < 3; ++trial) {
    LaurentPoly f = random_poly(M.nvars(), rng, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LaurentPoly lhs = M.generator_action(i, M.generator_action(j, f));
        LaurentPoly rhs = QScalar::q(M.context()->matrix()(i, j)) * M.generator_action(j, M.generator_action(i, f));
        if (!(lhs == rhs))
          return "x" + std::to_string(i + 1) + " x" + std::to_string(j + 1) + " on " + f.str() + ": " +
                 (lhs - rhs).str();
      }
  }
  return {};
}

std::string printed_residual(const std::string& name, const TorusElement& image) {
  const auto& ops = printed_action(name);
  for (const auto& e : box(4, -2, 2)) {
    LaurentPoly f = LaurentPoly::monomial(e);
    LaurentPoly a = element_action(image, f), b = apply_sum(ops, f);
    if (!(a == b)) return "at " + exponent_str(e) + ": " + (a - b).str();
  }
  return {};
}

TorusPtr random_context(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> entry(-4, 4);
  for (;;) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        rows[i][j] = entry(rng);
        rows[j][i] = -rows[i][j];
      }
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      bool zero = true;
      for (int j = 0; j < n; ++j) zero = zero && rows[i][j] == 0;
      ok = ok && !zero;
    }
    if (!ok) continue;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const TorusContext>(AntisymMatrix(rows), names);
  }
}

}  // namespace

std::vector<Check> laurentmod_checks() {
  const auto& E = EmbeddingContext::get();
  std::vector<Check> v;
  v.push_back({"laurent.generator_examples", "x5 f = f, x1 1 = x, x6 (xyzw) = q^16 xyzw", [] {
                 LaurentPoly f = LaurentPoly::monomial({1, -2, 0, 1}, QScalar::q(3)) +
                                 LaurentPoly::monomial({0, 1, 1, -1}, QScalar(2));
                 if (!(generator_action(5, f) == f)) return std::string("x5 moves f");
                 LaurentPoly one = LaurentPoly::constant(4, 1);
                 if (!(generator_action(1, one) == LaurentPoly::monomial({1, 0, 0, 0})))
                   return "x1 1 = " + generator_action(1, one).str();
                 LaurentPoly m = LaurentPoly::monomial({1, 1, 1, 1});
                 if (!(generator_action(6, m) == QScalar::q(16) * m)) return "x6 xyzw = " + generator_action(6, m).str();
                 return std::string();
               }});
  v.push_back({"laurent.torus_relations", "x_i x_j f = q^(Q_ij) x_j x_i f for all generator pairs", [] {
                 std::mt19937 rng(17);
                 return relation_residual(stated_module(), rng);
               }});
  v.push_back({"laurent.module_law", "(a b) f = a (b f) on random sparse a, b in T^6 and monomials f",
               [&E] {
                 std::mt19937 rng(2024);
                 std::uniform_int_distribution<int> ex(-2, 2);
                 for (int trial = 0; trial < 40; ++trial) {
                   TorusElement a = random_element(E.torus6, rng, 3, 2);
                   TorusElement b = random_element(E.torus6, rng, 3, 2);
                   IntVec e(4);
                   for (auto& x : e) x = ex(rng);
                   LaurentPoly f = LaurentPoly::monomial(e);
                   LaurentPoly lhs = element_action(a * b, f);
                   LaurentPoly rhs = element_action(a, element_action(b, f));
                   if (!(lhs == rhs)) return "a = " + a.str() + ", b = " + b.str() + ": " + (lhs - rhs).str();
                 }
                 return std::string();
               }});
  for (const char* name : {"y1", "y2", "y3", "boundary"}) {
    std::string n(name);
    v.push_back({"laurent.printed_action." + n,
                 "displayed " + n + " action equals the module action of its T^6 image on [-2,2]^4",
                 [&E, n] { return printed_residual(n, E.named(n)); }});
  }
  v.push_back({"laurent.boundary_subspace", "boundary maps the span of x/yz, y/zx, z/xy, w/y into itself",
               [] {
                 for (const auto& k : box(4, -1, 1)) {
                   LaurentPoly f = LaurentPoly::monomial(lattice_point(boundary_subspace_lattice(), k));
                   auto rep = check_invariant_subspace_boundary(f);
                   if (!rep.image_in_subspace)
                     return "k = " + exponent_str(k) + " leaves via " + exponent_str(rep.outside.front());
                 }
                 return std::string();
               }});
  v.push_back({"laurent.boundary_subspace_formula",
               "nine-term shift formula for the boundary on the invariant subspace", [] {
                 for (const auto& k : box(4, -2, 2)) {
                   LaurentPoly f = LaurentPoly::monomial(lattice_point(boundary_subspace_lattice(), k));
                   LaurentPoly a = element_action(EmbeddingContext::get().boundary, f);
                   LaurentPoly b = boundary_subspace_formula(k);
                   if (!(a == b)) return "k = " + exponent_str(k) + ": " + (a - b).str();
                 }
                 return std::string();
               }});
  v.push_back({"laurent.y2_subspace", "y2 maps the span of x/z, yw/xz into itself by the three-term formula",
               [] {
                 for (const auto& k : box(2, -3, 3)) {
                   LaurentPoly f = LaurentPoly::monomial(lattice_point(y2_subspace_lattice(), k));
                   auto rep = check_invariant_subspace_y2(f);
                   if (!rep.image_in_subspace)
                     return "k = " + exponent_str(k) + " leaves via " + exponent_str(rep.outside.front());
                   LaurentPoly b = y2_subspace_formula(k[0], k[1]);
                   if (!(rep.image == b)) return "k = " + exponent_str(k) + ": " + (rep.image - b).str();
                 }
                 return std::string();
               }});
  v.push_back({"laurent.boundary_no_monomial_eigenvector",
               "boundary f is never a scalar multiple of a monomial f on [-2,2]^4", [&E] {
                 for (const auto& e : box(4, -2, 2)) {
                   LaurentPoly img = element_action(E.boundary, LaurentPoly::monomial(e));
                   if (img.size() == 1 && img.terms().begin()->first == e) return "eigenvector " + exponent_str(e);
                   if (img.is_zero()) return "annihilated " + exponent_str(e);
                 }
                 return std::string();
               }});
  v.push_back({"laurent.proposition_instance",
               "general construction with x5 moved last and k = 5 reproduces the six generator actions",
               [&E] {
                 // Reorder to x1, x2, x3, x4, x6, x5 so the central generator comes last.
                 const int perm[6] = {0, 1, 2, 3, 5, 4};
                 std::vector<std::vector<int>> rows(6, std::vector<int>(6));
                 for (int i = 0; i < 6; ++i)
                   for (int j = 0; j < 6; ++j) rows[i][j] = E.torus6->matrix()(perm[i], perm[j]);
                 auto ctx = std::make_shared<const TorusContext>(
                     AntisymMatrix(rows), std::vector<std::string>{"x1", "x2", "x3", "x4", "x6", "x5"});
                 TorusModule M = proposition_module(ctx, 5);
                 for (int i = 0; i < 6; ++i)
                   if (!(M.generator(i) == printed_generator_actions()[perm[i]]))
                     return "generator x" + std::to_string(perm[i] + 1) + " differs";
                 return std::string();
               }});
  v.push_back({"laurent.proposition_random",
               "general construction satisfies the torus relations for random Q with central tail",
               [] {
                 std::mt19937 rng(99);
                 for (int trial = 0; trial < 12; ++trial) {
                   int n = 3 + trial % 4, k = 2 + trial % (n - 1);
                   TorusModule M = proposition_module(random_context(rng, n, k), k);
                   std::string r = relation_residual(M, rng);
                   if (!r.empty()) return "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": " + r;
                 }
                 return std::string();
               }});
  return v;
}

}  // namespace skein
