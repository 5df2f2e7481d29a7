#pragma once
// Dense exact linear algebra over Q.
//
// Rank, kernel and determinant all run on one fraction-free Bareiss
// elimination: rows are scaled to integers first (clearing denominators row
// by row), then every intermediate entry is an exact minor of the scaled
// matrix, so no rational normalisation happens inside the O(n^3) loop.
// Pivoting is deterministic: columns left to right, first row with a
// nonzero entry.  kernel_basis re-verifies M v = 0 and rank-nullity on
// every call; a failure there is a library bug, not bad input.

#include <cstddef>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

namespace detail {

struct Echelon {
  std::vector<std::vector<Int>> u;      // integer echelon rows (fraction-free)
  std::vector<std::size_t> pivot_col;   // pivot column of echelon row i
  int swap_sign = 1;                    // parity of row swaps
  Rat row_scale = 1;                    // product of the denominators cleared
};

// Fraction-free Gaussian elimination (Bareiss).  The returned rows are the
// upper-echelon part only; eliminated entries are exact zeros.
inline Echelon bareiss(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon e;
  std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = ilcm(l, den(m.at(i, j)));
    e.row_scale *= Rat(l);
    for (std::size_t j = 0; j < cols; ++j) {
      Rat v = m.at(i, j) * l;
      w[i][j] = num(v);  // exact integer by construction
    }
  }

  std::size_t r = 0;
  Int prev_piv = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w[p][c] == 0) ++p;
    if (p == rows) continue;  // no pivot in this column
    if (p != r) {
      std::swap(w[p], w[r]);
      e.swap_sign = -e.swap_sign;
    }
    const Int piv = w[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int wic = w[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = piv * w[i][j] - wic * w[r][j];
        // Exact by the Bareiss minor identity.
        w[i][j] = t / prev_piv;
      }
      w[i][c] = 0;
    }
    prev_piv = piv;
    e.pivot_col.push_back(c);
    ++r;
  }
  w.resize(r);
  e.u = std::move(w);
  return e;
}

}  // namespace detail

inline std::size_t rank_exact(const RatMatrix& m) {
  return detail::bareiss(m).pivot_col.size();
}

// Determinant of a square matrix.  In Bareiss form the last pivot *is* the
// determinant of the integer-scaled matrix (up to the swap sign).
inline Rat det_exact(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw UndefinedInputError("det_exact: matrix is not square");
  if (m.rows() == 0) return Rat(1);
  detail::Echelon e = detail::bareiss(m);
  if (e.pivot_col.size() < m.rows()) return Rat(0);
  const std::vector<Int>& last = e.u.back();
  Rat d(last[e.pivot_col.back()]);
  d *= e.swap_sign;
  return d / e.row_scale;
}

// Basis of { v : M v = 0 }.  One vector per free column, normalised to
// primitive integer coordinates with positive first nonzero entry.  The
// basis is audited before returning: every vector is multiplied back
// through M, and the rank-nullity identity is checked.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  detail::Echelon e = detail::bareiss(m);
  const std::size_t rank = e.pivot_col.size();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    // Back-substitute through the echelon rows (bottom-up).
    for (std::size_t ii = rank; ii-- > 0;) {
      const std::vector<Int>& row = e.u[ii];
      const std::size_t pc = e.pivot_col[ii];
      Rat s(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (v[j] != 0 && row[j] != 0) s += Rat(row[j]) * v[j];
      v[pc] = -s / Rat(row[pc]);
    }
    // Primitive integer normalisation for stable, readable output.
    Int l = 1;
    for (const Rat& x : v) l = ilcm(l, den(x));
    Int g = 0;
    std::vector<Int> w(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      w[j] = num(v[j] * l);
      g = igcd(g, w[j]);
    }
    if (g == 0) throw InternalError("kernel_basis: zero kernel vector");
    Int lead = 0;
    for (std::size_t j = 0; j < cols && lead == 0; ++j) lead = w[j];
    if (lead < 0) g = -g;
    for (std::size_t j = 0; j < cols; ++j) v[j] = Rat(w[j]) / Rat(g);
    basis.push_back(std::move(v));
  }

  // Audit: rank-nullity, and M v = 0 for every basis vector.
  if (rank + basis.size() != cols)
    throw InternalError("kernel_basis: rank-nullity violated");
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rat s(0);
      for (std::size_t j = 0; j < cols; ++j)
        if (v[j] != 0) s += m.at(i, j) * v[j];
      if (s != 0) throw InternalError("kernel_basis: M v != 0");
    }
  }
  return basis;
}

}  // namespace nearfree
