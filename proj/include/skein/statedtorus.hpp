// The rank-6 quantum torus model of the stated skein algebra of the
// once-punctured torus.
#pragma once

#include <string>
#include <vector>

#include "skein/qtorus.hpp"
#include "skein/report.hpp"

namespace skein {

/// The 6x6 commutation matrix of the model.
AntisymMatrix stated_torus_matrix();

/// Images of the generators and a few tangles in T^6.
struct EmbeddingContext {
  TorusPtr torus6;
  TorusElement y1, y2, y3, boundary;
  TorusElement X1_0_pp, X2_0_pp, X3_0_pp;          // q^(1/2) x_i
  TorusElement X1_half_pp, X1_minushalf_pp;        // X_{1,1/2}(+,+), X_{1,-1/2}(+,+)
  TorusElement boundary_arc_pp;                    // q^(1/2) x5

  static const EmbeddingContext& get();
  /// Looks up a constant by name (y1, y2, y3, boundary, X1_0, X2_0, X3_0,
  /// X1_half, X1_minushalf, arc, x1..x6); throws ContextError otherwise.
  TorusElement named(const std::string& name) const;
  static std::vector<std::string> names();
};

/// q y1 y2 y3 - q^2 y1^2 - q^-2 y2^2 - q^2 y3^2 + q^2 + q^-2.
TorusElement boundary_from_curves(const TorusElement& y1, const TorusElement& y2,
                                  const TorusElement& y3);

/// [Y2, [Y1, [Y3, a]_q]_q]_q / (q^2 - q^-2)^3.
TorusElement twist_shift_up(const TorusElement& a);
/// [[[a, Y2]_q, Y1]_q, Y3]_q / (q^2 - q^-2)^3.
TorusElement twist_shift_down(const TorusElement& a);

/// Sign pair (mu, nu), each +1 or -1.
struct StateLabel {
  int mu = 1;
  int nu = 1;
  std::string str() const;
  friend bool operator==(const StateLabel&, const StateLabel&) = default;
  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

enum class SymKind { X1, X2, X3, X3tilde, Y1, Y3tilde };

/// A generator symbol at twist k = 0; `half_back` marks the k - 1/2 variant.
struct Sym {
  SymKind kind;
  StateLabel state{};
  bool half_back = false;
  std::string str() const;
};

struct FormalTerm {
  QScalar coeff;
  std::vector<Sym> word;  // product left to right
};

/// One of the sixteen commutation relations between X_{1,k}(a) and X_{2,k}(b).
struct RelationEntry {
  int index = 0;
  StateLabel a, b;
  std::vector<FormalTerm> lhs, rhs;
  bool verifiable_in_embedding = false;
  std::string str() const;
};

const std::vector<RelationEntry>& relation_catalog();

/// Checks in T^6: cyclic brackets, boundary formula and its nine-term
/// expansion, centrality, twist round trips, X3 normalization, catalog
/// relations with known images, and the exploratory boundary-arc identity.
std::vector<Check> embedding_checks();

VerificationReport verify_bp_in_embedding();
VerificationReport verify_boundary_formula();
VerificationReport verify_relations();
/// (q^2 - q^-2)^-1 [q^(1/2) x1, y2]_q - q^(1/2) x3.
TorusElement x3_commutator_residual();

}  // namespace skein
