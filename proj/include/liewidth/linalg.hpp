#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace liewidth {

struct RrefResult {
  MatrixRat R;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot rule: first
/// nonzero entry in column order (exact arithmetic needs no magnitude
/// pivoting). The result is the unique rref of the input.
inline RrefResult rref(MatrixRat M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(p, r);
    const Rational piv = M(r, c);
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) /= piv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      const Rational f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  const std::size_t rank = pivots.size();
  return {std::move(M), std::move(pivots), rank};
}

inline std::size_t rank_of(const MatrixRat& M) { return rref(M).rank; }

/// Canonical nullspace basis read off the rref: one vector per free column,
/// with that free variable set to 1, ordered by free-column index.
inline std::vector<VectorRat> kernel_basis(const MatrixRat& M) {
  const RrefResult rr = rref(M);
  std::vector<bool> is_pivot(M.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<VectorRat> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorRat v(M.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.R(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Particular solution of Mx = b with all free variables set to 0.
/// Nullopt iff the system is inconsistent (b outside the column space).
inline std::optional<VectorRat> solve_particular(const MatrixRat& M, const VectorRat& b) {
  if (b.size() != M.rows()) throw std::invalid_argument("solve_particular: rhs length mismatch");
  MatrixRat aug(M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
    aug(i, M.cols()) = b[i];
  }
  const RrefResult rr = rref(std::move(aug));
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == M.cols()) return std::nullopt;
  VectorRat x(M.cols());
  for (std::size_t k = 0; k < rr.rank; ++k) x[rr.pivot_cols[k]] = rr.R(k, M.cols());
  return x;
}

/// Exact inverse; throws on singular input.
inline MatrixRat inverse(const MatrixRat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = M.rows();
  const RrefResult rr = rref(MatrixRat::hstack(M, MatrixRat::identity(n)));
  bool full = rr.rank >= n;
  for (std::size_t k = 0; full && k < n; ++k) full = rr.pivot_cols[k] == k;
  if (!full) throw std::invalid_argument("inverse: singular matrix");
  MatrixRat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.R(i, n + j);
  return inv;
}

}  // namespace liewidth
