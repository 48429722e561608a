// Expression syntax shared by the command-line tools: sums, products (by
// juxtaposition or '*'), integer powers (half-integer powers of q), division
// by scalars, and q-commutator brackets [a, b]_q and [a, b]_{q^-1}.
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skein/daha.hpp"
#include "skein/laurentmod.hpp"
#include "skein/qtorus.hpp"
#include "skein/solidtorus.hpp"

namespace skein {

class UnknownSymbolError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Symbol, Sum, Product, Quotient, Negate, Power, Bracket };
  Kind kind = Kind::Number;
  Rational number;             // Number
  std::string name;            // Symbol
  std::vector<NodePtr> kids;   // Sum, Product: any count; Quotient, Bracket: 2; Negate, Power: 1
  int exp_num = 1;             // Power exponent exp_num / exp_den, exp_den in {1, 2}
  int exp_den = 1;
  int dir = 1;                 // Bracket: +1 for _q, -1 for _{q^-1}
};

/// Parses an expression; throws ParseError carrying the offending position.
NodePtr parse_expression(std::string_view src);
/// Canonical rendering; parse_expression(render_expression(e)) renders identically.
std::string render_expression(const NodePtr& e);

/// Evaluates with X, Y in the rank-2 torus.
TorusElement eval_rank2(const NodePtr& e);
/// Evaluates in T^6 with x1..x6 and the named embedding constants.
TorusElement eval_torus6(const NodePtr& e);
/// Evaluates with X, Y, T and e (the spherical idempotent) in the DAHA.
DahaElement eval_daha(const NodePtr& e);
/// Evaluates with v(+,+) ... v(-,-) (also vpp, vpm, vmp, vmm) in the solid-torus algebra.
VElement eval_v(const NodePtr& e);
/// Evaluates with x, y, z, w as commuting Laurent variables.
LaurentPoly eval_laurent(const NodePtr& e);
/// Evaluates a pure scalar expression in q^(1/2) and t.
QFraction eval_scalar(const NodePtr& e);

}  // namespace skein
