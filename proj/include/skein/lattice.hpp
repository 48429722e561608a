// Integer lattices in Z^n with exact membership tests.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace skein {

using IntVec = std::vector<int>;

/// The Z-span of a list of integer vectors, kept in row Hermite normal form
/// together with the unimodular transform back to the original generators.
class Lattice {
public:
  Lattice(int dim, std::vector<IntVec> generators);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<IntVec>& generators() const { return gens_; }
  /// Nonzero HNF rows.
  std::vector<std::vector<mpz_class>> hnf() const { return basis_; }

  bool contains(const IntVec& v) const { return coordinates(v).has_value(); }
  /// Integer c with sum_i c_i * generators[i] = v, or nullopt if v is not in the lattice.
  std::optional<std::vector<mpz_class>> coordinates(const IntVec& v) const;

private:
  int dim_;
  std::vector<IntVec> gens_;
  std::vector<std::vector<mpz_class>> basis_;      // HNF rows
  std::vector<std::vector<mpz_class>> transform_;  // basis_[r] = sum_i transform_[r][i] gens_[i]
};

}  // namespace skein
