// Quantum tori T^n(Q): x_i x_j = q^(Q_ij) x_j x_i.
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/scalars.hpp"

namespace skein {

class ContextError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

using Monomial = std::vector<int>;

/// Antisymmetric integer matrix.
class AntisymMatrix {
public:
  explicit AntisymMatrix(std::vector<std::vector<int>> rows);
  int n() const { return static_cast<int>(rows_.size()); }
  int operator()(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  friend bool operator==(const AntisymMatrix& a, const AntisymMatrix& b) { return a.rows_ == b.rows_; }

private:
  std::vector<std::vector<int>> rows_;
};

/// The (n, Q) data of a quantum torus plus generator names for rendering.
class TorusContext {
public:
  TorusContext(AntisymMatrix q, std::vector<std::string> names);

  int n() const { return q_.n(); }
  const AntisymMatrix& matrix() const { return q_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Power of q in x^u x^v = q^phase(u,v) x^(u+v), monomials in ascending order.
  int phase(const Monomial& u, const Monomial& v) const;
  /// Sum_ij Q_ij u_i v_j, the commutation exponent: x^u x^v = q^pairing x^v x^u.
  int pairing(const Monomial& u, const Monomial& v) const;

private:
  AntisymMatrix q_;
  std::vector<std::string> names_;
};

using TorusPtr = std::shared_ptr<const TorusContext>;

/// The rank-2 torus A_q with XY = q^2 YX.
TorusPtr rank2_torus();

/// Sparse element of a quantum torus in normal-ordered monomials.
class TorusElement {
public:
  using Terms = std::map<Monomial, QScalar>;

  explicit TorusElement(TorusPtr ctx);
  TorusElement(TorusPtr ctx, const QScalar& c);

  static TorusElement monomial(TorusPtr ctx, Monomial u, const QScalar& c = QScalar(1));
  /// x_i^power, 0-based generator index.
  static TorusElement generator(TorusPtr ctx, int i, int power = 1);

  const TorusPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QScalar coeff(const Monomial& u) const;

  void add_term(const Monomial& u, const QScalar& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement operator-() const;
  TorusElement& operator*=(const QScalar& c);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(TorusElement a, const QScalar& c) { return a *= c; }
  friend TorusElement operator*(const QScalar& c, TorusElement a) { return a *= c; }
  friend bool operator==(const TorusElement& a, const TorusElement& b);
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  /// Inverse of a single-term element.
  TorusElement monomial_inverse() const;
  /// Integer power; negative powers require a single term.
  TorusElement pow(int n) const;
  /// Coefficientwise exact division; throws DivisionError if inexact.
  TorusElement divide_exact(const QScalar& d) const;
  /// Applies f to every coefficient.
  template <class F>
  TorusElement map_coefficients(F f) const {
    TorusElement r(ctx_);
    for (const auto& [u, c] : terms_) r.add_term(u, f(c));
    return r;
  }

  /// Renders as "c*x1^2*x3^-1 + ...", monomials sorted lexicographically.
  std::string str() const;

private:
  TorusPtr ctx_;
  Terms terms_;
};

void require_same_context(const TorusElement& a, const TorusElement& b);

/// [a,b]_q = q a b - q^(-1) b a; with inverse_q the bracket [a,b]_{q^-1}.
TorusElement q_commutator(const TorusElement& a, const TorusElement& b, bool inverse_q = false);

/// e_{r,s} = q^(-rs) X^r Y^s in a rank-2 context.
TorusElement e_basis(const TorusPtr& ctx, int r, int s);
/// Automorphism negating every exponent vector (rank 2).
TorusElement z2_flip(const TorusElement& a);

/// Generator-by-generator transposition count, the reference for phase().
int brute_force_phase(const TorusContext& ctx, const Monomial& u, const Monomial& v);

std::ostream& operator<<(std::ostream& os, const TorusElement& a);

/// Renders a sparse Laurent sum as "c*x1^2*x3^-1 + ..." using the given variable names.
std::string render_terms(const std::map<Monomial, QScalar>& terms,
                         const std::vector<std::string>& names);

}  // namespace skein
