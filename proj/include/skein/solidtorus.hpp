// The stated skein algebra of the solid torus with one marking: four arc
// generators v(mu,nu), rewriting to ordered monomials, and the partial action
// of the punctured-torus generators on it.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/report.hpp"
#include "skein/scalars.hpp"

namespace skein {

/// Generator indices in normal-form order (+,+) < (+,-) < (-,+) < (-,-).
enum VGen : int { VPP = 0, VPM = 1, VMP = 2, VMM = 3 };

/// Exponents (a, b, c, d) of v(+,+)^a v(+,-)^b v(-,+)^c v(-,-)^d.
using VMonomial = std::array<int, 4>;
using VWord = std::vector<int>;

/// Linear combination of ordered v-monomials.
class VElement {
public:
  using Terms = std::map<VMonomial, QScalar>;

  VElement() = default;
  VElement(const QScalar& c);  // NOLINT(google-explicit-constructor)
  static VElement generator(int g);
  static VElement monomial(const VMonomial& m, const QScalar& c = QScalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QScalar coeff(const VMonomial& m) const;
  void add_term(const VMonomial& m, const QScalar& c);

  VElement& operator+=(const VElement& o);
  VElement& operator-=(const VElement& o);
  VElement& operator*=(const QScalar& c);
  VElement operator-() const;
  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend VElement operator-(VElement a, const VElement& b) { return a -= b; }
  friend VElement operator*(VElement a, const QScalar& c) { return a *= c; }
  friend VElement operator*(const QScalar& c, VElement a) { return a *= c; }
  friend bool operator==(const VElement& a, const VElement& b) { return a.terms_ == b.terms_; }

  /// Coefficientwise exact division; nullopt if some coefficient does not divide.
  std::optional<VElement> divide_exact(const QScalar& d) const;

  /// Renders as "q^2*v(+,+)^2*v(-,-) - v(+,-)".
  std::string str() const;

private:
  Terms terms_;
};

std::string vgen_name(int g);
VWord monomial_word(const VMonomial& m);

/// One relation of the algebra: lhs = v_i v_j with i > j, rhs as written.
struct VRule {
  int left, right;
  std::vector<std::pair<QScalar, VWord>> rhs;
};
const std::vector<VRule>& v_rules();

/// Normal form of a word, rewriting the leftmost out-of-order pair first.
VElement v_normal_form(const VWord& word);
/// Product of two elements: concatenate ordered words and normalize.
VElement v_mul(const VElement& a, const VElement& b);

/// q^(1/2) v(+,-) - q^(5/2) v(-,+).
VElement core_curve();
/// The trivial-arc constants C(+,+), C(+,-), C(-,+), C(-,-).
QScalar state_constant(int g);

/// The action data on the solid torus that is stated outright.
namespace action_table {
VElement x1(int g, const VElement& f);   // v_g f
VElement x2_on_one(int g);               // C_g
VElement x3_on_one(int g);               // -q^-3 v_g
VElement y1(const VElement& f);          // core curve times f
VElement y2_on_one();                    // -q^2 - q^-2
VElement y2_on_generator(int g);         // (-q^4 - q^-4) v_g
VElement y3_on_one();                    // -q^-3 core curve
VElement boundary_on_one();              // -q^2 - q^-2
VElement boundary_on_generator(int g);   // (-q^6 - q^-6) v_g - (q^2 - q^-2)^2 C_g core curve
/// The stated example value of X2(-,-) on v(+,-).
VElement x2_example();
}  // namespace action_table

/// Result of applying every catalog relation to the empty link and solving
/// for the actions that the table leaves open.
struct ConsistencyResult {
  std::vector<std::string> unknowns;
  std::vector<std::optional<VElement>> values;  // determined values, by unknown index
  std::vector<std::string> derived_from;        // relations used for each determined value
  std::vector<std::string> contradictions;
  std::size_t equations = 0;

  std::optional<VElement> value(const std::string& name) const;
  std::string str() const;
};

/// Name of the unknown for X2(b) acting on v_a, both in 0..3.
std::string x2_unknown_name(int b, int a);
ConsistencyResult relation_action_consistency();

std::vector<Check> solidtorus_checks();

}  // namespace skein
