// Closed curves on the torus in the rank-2 quantum torus model, and the
// Dehn-twist construction of (p,q) curves as nested q-commutators.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skein/qtorus.hpp"

namespace skein {

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// (m,l) up to overall sign; canonical when m > 0 or (m = 0 and l >= 0).
struct CurveLabel {
  int m = 0;
  int l = 0;
  static CurveLabel canonical(int m, int l);
  friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
  friend auto operator<=>(const CurveLabel&, const CurveLabel&) = default;
};

/// Coefficients c_k of x^k, from T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}.
std::vector<long long> chebyshev(int n);

/// Evaluates chebyshev(n) at an element of any torus.
TorusElement chebyshev_eval(int n, const TorusElement& x);

/// T_d(e_{a,b} + e_{-a,-b}) with d = gcd(m,l) and (a,b) = (m,l)/d, in A_q.
TorusElement curve_element(int m, int l);

using Vec2 = std::pair<int, int>;

/// Stern-Brocot parents of p/q: larger parent first, u+w = p, v+z = q,
/// |uz - vw| = 1. Requires p > 0 and gcd(p,q) = 1, not a base case.
std::pair<Vec2, Vec2> farey_parents(int p, int q);

/// Nested q-commutator tree over named leaves. A node evaluates to
/// sign * [left, right]_{q^dir} / (q^2 - q^-2).
struct CommutatorExpr {
  std::string leaf;  // empty for internal nodes
  std::shared_ptr<const CommutatorExpr> left;
  std::shared_ptr<const CommutatorExpr> right;
  int dir = 1;   // +1 for [.,.]_q, -1 for [.,.]_{q^-1}
  int sign = 1;

  static std::shared_ptr<const CommutatorExpr> make_leaf(std::string name);
  static std::shared_ptr<const CommutatorExpr> make_node(std::shared_ptr<const CommutatorExpr> a,
                                                          std::shared_ptr<const CommutatorExpr> b,
                                                          int dir, int sign);
  bool is_leaf() const { return !leaf.empty(); }
  /// Number of bracket nodes.
  int brackets() const;
  int depth() const;
  /// Bracket word, e.g. "[Y1, Y3]_q" or "-[Y2, X]_{q^-1}".
  std::string str() const;
  /// Word with the normalization written out, e.g. "1/(q^2-q^-2)^2 [...]".
  std::string normalized_str() const;
};

using ExprPtr = std::shared_ptr<const CommutatorExpr>;

/// Closed (p,q) curve as brackets of Y1 = (1,0), Y2 = (0,1), Y3 = (1,1).
ExprPtr curve_expression(int p, int q);

/// Tangle word: successive Dehn twists of the base arc X of slope (1,0)
/// along Y1, Y2, Y3 and previously built closed curves.
ExprPtr tangle_expression(int p, int q);

/// Evaluates leaves through the assignment and divides each bracket by
/// q^2 - q^-2; throws DivisionError when that division is inexact.
TorusElement evaluate_curve_expression(const ExprPtr& e,
                                       const std::map<std::string, TorusElement>& assignment);

/// The A_q assignment Y1, Y2, Y3 and X (= Y1) to curve elements.
std::map<std::string, TorusElement> standard_curve_assignment();

/// The literal six-bracket (5,3) word
/// -1/C^6 [[Y3,[Y1,[Y2,Y1]_{q^-1}]_q]_{q^-1}, [Y1,[Y2,X]_{q^-1}]_q]_q
/// with C = q^2 - q^-2. Its outer bracket runs in the q direction; kept for
/// comparison with tangle_expression(5,3), whose outer bracket is a q^-1 one.
ExprPtr literal_word_5_3();

}  // namespace skein
