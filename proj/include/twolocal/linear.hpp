#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twolocal/rational.hpp"

namespace twolocal {

/// Sparse row: (column, nonzero coefficient) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct LinearRow {
  SparseRow coeffs;
  Rational rhs;
};

/// Exact linear system over Q with human-readable variable labels.
class LinearSystem {
public:
  LinearSystem() = default;
  explicit LinearSystem(std::size_t num_vars) : labels_(num_vars) {
    for (std::size_t i = 0; i < num_vars; ++i) labels_[i] = "x_" + std::to_string(i);
  }
  explicit LinearSystem(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::size_t add_var(std::string label) {
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
  }

  /// Adds sum_j coeffs[j]*x_j = rhs. Zero coefficients are dropped.
  void add_row(const std::map<std::size_t, Rational>& coeffs, Rational rhs) {
    LinearRow row{{}, std::move(rhs)};
    for (const auto& [j, c] : coeffs) {
      if (j >= num_vars())
        throw std::out_of_range("row references variable " + std::to_string(j) + " of " + std::to_string(num_vars()));
      if (!c.is_zero()) row.coeffs.emplace_back(j, c);
    }
    rows_.push_back(std::move(row));
  }

  /// Convenience for x_var = value.
  void pin(std::size_t var, Rational value) { add_row({{var, Rational(1)}}, std::move(value)); }

  std::size_t num_vars() const { return labels_.size(); }
  const std::vector<LinearRow>& rows() const { return rows_; }
  const std::vector<std::string>& var_labels() const { return labels_; }

private:
  std::vector<std::string> labels_;
  std::vector<LinearRow> rows_;
};

enum class SolveStatus { Unique, Affine, Infeasible };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Affine: return "affine";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

/// `particular` has every free variable set to 0. Nullspace vectors are listed
/// in increasing order of their free column and scaled so their first nonzero
/// coordinate is 1. The nullspace is reported even for infeasible systems.
struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<std::vector<Rational>> particular;
  std::vector<std::vector<Rational>> nullspace;
  std::size_t rank = 0;

  bool feasible() const { return particular.has_value(); }
};

namespace detail {

// a -= k * b, both sorted sparse rows.
inline SparseRow axpy(const SparseRow& a, const Rational& k, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(k * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - k * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline const Rational* find_entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& p, std::size_t c) { return p.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

/// Incremental row echelon form. Rows are processed in input order and each
/// surviving row pivots on its first nonzero column.
class Echelon {
public:
  explicit Echelon(std::size_t num_vars) : num_vars_(num_vars) {}

  void insert(SparseRow row, Rational rhs) {
    std::size_t pos = 0;
    while (pos < row.size()) {
      std::size_t col = row[pos].first;
      auto piv = pivot_of_col_.find(col);
      if (piv == pivot_of_col_.end()) {
        ++pos;
        continue;
      }
      Rational k = row[pos].second;
      const auto& p = rows_[piv->second];
      row = axpy(row, k, p.coeffs);
      rhs -= k * p.rhs;
      // Entries left of `col` are untouched, so resume there.
      pos = static_cast<std::size_t>(
          std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; }) -
          row.begin());
    }
    if (row.empty()) {
      if (!rhs.is_zero()) inconsistent_ = true;
      return;
    }
    Rational lead = row.front().second;
    if (!lead.is_one()) {
      Rational inv = lead.reciprocal();
      for (auto& [c, v] : row) v *= inv;
      rhs *= inv;
    }
    pivot_of_col_.emplace(row.front().first, rows_.size());
    rows_.push_back(LinearRow{std::move(row), std::move(rhs)});
  }

  /// Back-substitution to reduced row echelon form.
  void reduce() {
    for (auto it = pivot_of_col_.rbegin(); it != pivot_of_col_.rend(); ++it) {
      auto& r = rows_[it->second];
      std::size_t pos = 1;
      while (pos < r.coeffs.size()) {
        std::size_t col = r.coeffs[pos].first;
        auto piv = pivot_of_col_.find(col);
        if (piv == pivot_of_col_.end()) {
          ++pos;
          continue;
        }
        Rational k = r.coeffs[pos].second;
        const auto& p = rows_[piv->second];
        r.coeffs = axpy(r.coeffs, k, p.coeffs);
        r.rhs -= k * p.rhs;
        pos = static_cast<std::size_t>(std::lower_bound(r.coeffs.begin(), r.coeffs.end(), col,
                                                        [](const auto& e, std::size_t c) { return e.first < c; }) -
                                       r.coeffs.begin());
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  bool inconsistent() const { return inconsistent_; }
  const std::map<std::size_t, std::size_t>& pivots() const { return pivot_of_col_; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  std::size_t num_vars() const { return num_vars_; }

private:
  std::size_t num_vars_;
  std::map<std::size_t, std::size_t> pivot_of_col_;
  std::vector<LinearRow> rows_;
  bool inconsistent_ = false;
};

inline Echelon eliminate(const LinearSystem& sys) {
  Echelon ech(sys.num_vars());
  for (const auto& r : sys.rows()) ech.insert(r.coeffs, r.rhs);
  return ech;
}

}  // namespace detail

/// Exact Gauss-Jordan elimination. Output depends only on the input.
inline SolveResult solve(const LinearSystem& sys) {
  detail::Echelon ech = detail::eliminate(sys);
  ech.reduce();
  const std::size_t n = sys.num_vars();
  SolveResult res;
  res.rank = ech.rank();

  std::vector<bool> is_pivot(n, false);
  for (const auto& [col, r] : ech.pivots()) is_pivot[col] = true;

  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = Rational(1);
    for (const auto& [col, ri] : ech.pivots())
      if (const Rational* c = detail::find_entry(ech.rows()[ri].coeffs, f)) v[col] = -*c;
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (!first->is_one()) {
      Rational inv = first->reciprocal();
      for (auto& x : v) x *= inv;
    }
    res.nullspace.push_back(std::move(v));
  }

  if (ech.inconsistent()) {
    res.status = SolveStatus::Infeasible;
    return res;
  }
  std::vector<Rational> x(n);
  for (const auto& [col, ri] : ech.pivots()) x[col] = ech.rows()[ri].rhs;
  res.particular = std::move(x);
  res.status = res.nullspace.empty() ? SolveStatus::Unique : SolveStatus::Affine;
  return res;
}

/// Rank of the coefficient matrix.
inline std::size_t rank(const LinearSystem& sys) { return detail::eliminate(sys).rank(); }

inline std::size_t nullspace_dim(const LinearSystem& sys) { return sys.num_vars() - rank(sys); }

/// Residual of row i at x (lhs - rhs, or lhs alone when `homogeneous`).
inline Rational residual(const LinearRow& row, const std::vector<Rational>& x, bool homogeneous = false) {
  Rational acc(0);
  for (const auto& [j, c] : row.coeffs) acc += c * x.at(j);
  return homogeneous ? acc : acc - row.rhs;
}

/// True iff x satisfies every row exactly (the homogeneous rows if `homogeneous`).
inline bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x, bool homogeneous = false) {
  if (x.size() != sys.num_vars()) return false;
  return std::all_of(sys.rows().begin(), sys.rows().end(),
                     [&](const LinearRow& r) { return residual(r, x, homogeneous).is_zero(); });
}

/// Rank of a list of dense vectors (rows), by the same exact elimination.
inline std::size_t vector_rank(const std::vector<std::vector<Rational>>& vecs, std::size_t dim) {
  detail::Echelon ech(dim);
  for (const auto& v : vecs) {
    SparseRow r;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r.emplace_back(j, v[j]);
    ech.insert(std::move(r), Rational(0));
  }
  return ech.rank();
}

}  // namespace twolocal
