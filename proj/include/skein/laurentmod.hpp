// Quantum tori acting on commutative Laurent polynomials by monomial shift
// operators, and the four-variable module of the rank-6 model.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/lattice.hpp"
#include "skein/qtorus.hpp"
#include "skein/report.hpp"

namespace skein {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse Laurent polynomial in commuting variables with QScalar coefficients.
class LaurentPoly {
public:
  using Terms = std::map<IntVec, QScalar>;

  explicit LaurentPoly(int nvars = 4) : nvars_(nvars) {}
  static LaurentPoly monomial(IntVec e, const QScalar& c = QScalar(1));
  static LaurentPoly constant(int nvars, const QScalar& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QScalar coeff(const IntVec& e) const;
  void add_term(const IntVec& e, const QScalar& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const QScalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const QScalar& c) { return a *= c; }
  friend LaurentPoly operator*(const QScalar& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Variables are x, y, z, w for four variables and y1, y2, ... otherwise.
  std::vector<std::string> variable_names() const;
  std::string str() const;

private:
  int nvars_;
  Terms terms_;
};

/// f |-> prefactor * x^multiplier * f(q^(shift_1/2) x_1, ..., q^(shift_n/2) x_n).
/// Shifts are stored in units of q^(1/2).
struct ShiftOperator {
  IntVec multiplier;
  IntVec half_shift;
  QScalar prefactor{1};

  static ShiftOperator identity(int nvars);
  /// The operator with integer q-shifts, as the formulas are usually written.
  static ShiftOperator with_q_shifts(IntVec multiplier, const IntVec& q_shift);

  LaurentPoly apply(const LaurentPoly& f) const;
  ShiftOperator inverse() const;
  ShiftOperator pow(int n) const;
  friend bool operator==(const ShiftOperator&, const ShiftOperator&) = default;
};

/// (a ∘ b)(f) = a(b(f)).
ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b);

/// Sum of shift operators applied to f.
LaurentPoly apply_sum(const std::vector<ShiftOperator>& ops, const LaurentPoly& f);

/// A T^n(Q)-module on Laurent polynomials where each generator acts by a shift operator.
class TorusModule {
public:
  TorusModule(TorusPtr ctx, int nvars, std::vector<ShiftOperator> generators);

  const TorusPtr& context() const { return ctx_; }
  int nvars() const { return nvars_; }
  const ShiftOperator& generator(int i) const { return gens_.at(i); }

  /// x_i^power acting on f, 0-based i.
  LaurentPoly generator_action(int i, const LaurentPoly& f, int power = 1) const;
  /// The ordered monomial x_1^u1 ... x_n^un as one operator (x_n applied first).
  ShiftOperator monomial_operator(const Monomial& u) const;
  /// Linear extension over the normal-ordered monomials of a.
  LaurentPoly act(const TorusElement& a, const LaurentPoly& f) const;

private:
  TorusPtr ctx_;
  int nvars_;
  std::vector<ShiftOperator> gens_;
};

/// The general construction: if x_1..x_k are the non-central generators and
/// x_(k+1)..x_n are central, K[y_1^±, ..., y_(k-1)^±] is a module with
/// x_i f = y_i f(q^(Q_ij/2) y_j) for i < k, x_k f = f(q^(Q_kj) y_j), x_m f = f.
/// Throws ContextError when the centrality hypothesis fails.
TorusModule proposition_module(const TorusPtr& ctx, int k);

/// The four-variable module of the rank-6 model (variables x, y, z, w).
const TorusModule& stated_module();

/// The six generator actions as written, for x_1..x_6.
const std::vector<ShiftOperator>& printed_generator_actions();
/// The displayed actions of y1, y2, y3 and the boundary curve ("y1", "y2", "y3", "boundary").
const std::vector<ShiftOperator>& printed_action(const std::string& name);

/// Shorthand for stated_module().generator_action(i - 1, f), i in 1..6.
LaurentPoly generator_action(int i, const LaurentPoly& f);
/// Shorthand for stated_module().act(a, f).
LaurentPoly element_action(const TorusElement& a, const LaurentPoly& f);

/// Span of (x/yz), (y/zx), (z/xy), (w/y).
const Lattice& boundary_subspace_lattice();
/// Span of (x/z), (yw/xz).
const Lattice& y2_subspace_lattice();

struct MembershipReport {
  LaurentPoly image;
  bool image_in_subspace = false;
  std::vector<IntVec> outside;  // image monomials not in the lattice
};

/// Applies the boundary curve to f and tests the image against the boundary
/// subspace lattice. Throws PreconditionError naming a monomial of f outside it.
MembershipReport check_invariant_subspace_boundary(const LaurentPoly& f);
/// Same for y2 and its rank-2 lattice.
MembershipReport check_invariant_subspace_y2(const LaurentPoly& f);

/// The three-term formula for y2 on (x/z)^k1 (yw/xz)^k2.
LaurentPoly y2_subspace_formula(int k1, int k2);
/// The nine-term formula for the boundary curve on the subspace monomial with lattice coordinates k.
LaurentPoly boundary_subspace_formula(const IntVec& k);

std::vector<Check> laurentmod_checks();

}  // namespace skein
