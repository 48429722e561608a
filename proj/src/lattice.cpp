#include "skein/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace skein {

namespace {

using Row = std::vector<mpz_class>;

void axpy(Row& dst, const mpz_class& a, const Row& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
}

}  // namespace

Lattice::Lattice(int dim, std::vector<IntVec> generators) : dim_(dim), gens_(std::move(generators)) {
  const std::size_t m = gens_.size();
  std::vector<Row> rows, tr;
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<int>(gens_[i].size()) != dim)
      throw std::invalid_argument("lattice generator has wrong dimension");
    rows.emplace_back(gens_[i].begin(), gens_[i].end());
    Row e(m, 0);
    e[i] = 1;
    tr.push_back(std::move(e));
  }
  std::size_t top = 0;
  for (int col = 0; col < dim && top < m; ++col) {
    // Euclid on column col among rows top..m-1.
    for (;;) {
      std::size_t pivot = m;
      for (std::size_t r = top; r < m; ++r)
        if (rows[r][col] != 0 && (pivot == m || abs(rows[r][col]) < abs(rows[pivot][col]))) pivot = r;
      if (pivot == m) break;
      std::swap(rows[top], rows[pivot]);
      std::swap(tr[top], tr[pivot]);
      bool done = true;
      for (std::size_t r = top + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        axpy(rows[r], -f, rows[top]);
        axpy(tr[r], -f, tr[top]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (auto& x : rows[top]) x = -x;
      for (auto& x : tr[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      axpy(rows[r], -f, rows[top]);
      axpy(tr[r], -f, tr[top]);
    }
    ++top;
  }
  rows.resize(top);
  tr.resize(top);
  basis_ = std::move(rows);
  transform_ = std::move(tr);
}

std::optional<std::vector<mpz_class>> Lattice::coordinates(const IntVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector has wrong dimension");
  Row rest(v.begin(), v.end());
  Row coeffs(gens_.size(), 0);
  for (const auto& row : basis_) {
    int col = 0;
    while (row[col] == 0) ++col;
    for (int c = 0; c < col; ++c)
      if (rest[c] != 0) return std::nullopt;
    if (rest[col] % row[col] != 0) return std::nullopt;
    mpz_class f = rest[col] / row[col];
    axpy(rest, -f, row);
    axpy(coeffs, f, transform_[&row - basis_.data()]);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coeffs;
}

}  // namespace skein
