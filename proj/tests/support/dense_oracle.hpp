#pragma once

// Independent dense Gauss-Jordan elimination over mpq_class, used to cross-check
// the sparse solver. Pivots on the column order, one row at a time.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "twolocal/linear.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

class DenseBasis {
public:
  explicit DenseBasis(std::size_t width) : width_(width) {}

  /// Reduces `r` against the basis and keeps it if it is independent.
  bool insert(Row r) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (sgn(r[p]) == 0) continue;
      const mpq_class f = r[p];
      for (std::size_t c = p; c < width_; ++c)
        if (sgn(rows_[k][c]) != 0) r[c] -= f * rows_[k][c];
    }
    std::size_t p = 0;
    while (p < width_ && sgn(r[p]) == 0) ++p;
    if (p == width_) return false;
    const mpq_class inv = 1 / r[p];
    for (std::size_t c = p; c < width_; ++c) r[c] *= inv;
    // Keep earlier rows reduced at the new pivot so later reductions stay one pass.
    for (auto& row : rows_) {
      if (sgn(row[p]) == 0) continue;
      const mpq_class f = row[p];
      for (std::size_t c = p; c < width_; ++c)
        if (sgn(r[c]) != 0) row[c] -= f * r[c];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

inline mpq_class to_mpq(const twolocal::Rational& r) { return mpq_class(r.str()); }

inline Row dense_row(const twolocal::LinearRow& row, std::size_t n, bool augmented) {
  Row r(n + (augmented ? 1 : 0));
  for (const auto& [i, c] : row.coeffs) r[i] += to_mpq(c);
  if (augmented) r[n] = to_mpq(row.rhs);
  return r;
}

inline std::size_t rank(const twolocal::LinearSystem& sys) {
  DenseBasis b(sys.num_vars());
  for (const auto& row : sys.rows()) b.insert(dense_row(row, sys.num_vars(), false));
  return b.rank();
}

/// Consistent iff the augmented matrix has the same rank as the coefficient matrix.
inline bool consistent(const twolocal::LinearSystem& sys) {
  DenseBasis a(sys.num_vars()), aug(sys.num_vars() + 1);
  for (const auto& row : sys.rows()) {
    a.insert(dense_row(row, sys.num_vars(), false));
    aug.insert(dense_row(row, sys.num_vars(), true));
  }
  return a.rank() == aug.rank();
}

inline std::size_t vector_rank(const std::vector<std::vector<twolocal::Rational>>& vecs, std::size_t dim) {
  DenseBasis b(dim);
  for (const auto& v : vecs) {
    Row r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = to_mpq(v[i]);
    b.insert(std::move(r));
  }
  return b.rank();
}

}  // namespace oracle
