#pragma once

// Dense exact linear algebra over a field: rank, null space, spans and
// subspace intersection. Templated on the scalar so the same elimination
// runs over Rational (the default) or any other exact field type.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieslice/rational.hpp"

namespace lieslice {

template <class F>
using Vec = std::vector<F>;

template <class F>
inline bool is_zero(const F& x) {
  return x == F(0);
}

template <class F>
inline bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Row-major dense matrix. Entry count is always rows * cols.
template <class F = Rational>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: dimension mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<F>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: dimension mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const { return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  Vec<F> column(std::size_t c) const {
    Vec<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<F> apply(const Vec<F>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec<F> y(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
struct Echelon {
  Matrix<F> reduced;                // reduced row echelon form, same shape as input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Gauss-Jordan elimination. Exact, so the reduced form is unique.
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead_row, k));
    const F inv = F(1) / m(lead_row, c);
    for (std::size_t k = c; k < cols; ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const F factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(m(lead_row, k))) m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of the right null space {x : m x = 0}; empty iff rank == cols.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;

  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace detail {

template <class F>
std::size_t common_dimension(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b, std::size_t fallback) {
  std::size_t dim = fallback;
  bool seen = false;
  for (const auto* list : {&a, &b}) {
    for (const auto& v : *list) {
      if (!seen) {
        dim = v.size();
        seen = true;
      } else if (v.size() != dim) {
        throw std::invalid_argument("subspace vectors have mismatched dimensions (" + std::to_string(dim) + " vs " +
                                    std::to_string(v.size()) + ")");
      }
    }
  }
  return dim;
}

}  // namespace detail

/// Canonical basis (nonzero rows of the reduced echelon form) of span(vectors).
template <class F>
std::vector<Vec<F>> span_basis(const std::vector<Vec<F>>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t dim = detail::common_dimension(vectors, {}, 0);
  const auto ech = row_reduce(Matrix<F>::from_rows(vectors, dim));
  std::vector<Vec<F>> out;
  out.reserve(ech.pivots.size());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) out.push_back(ech.reduced.row(r));
  return out;
}

template <class F>
std::size_t span_dimension(const std::vector<Vec<F>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = detail::common_dimension(vectors, {}, 0);
  return rank(Matrix<F>::from_rows(vectors, dim));
}

template <class F>
bool in_span(const std::vector<Vec<F>>& vectors, const Vec<F>& v) {
  if (is_zero_vector(v)) return true;
  auto extended = vectors;
  extended.push_back(v);
  return span_dimension(extended) == span_dimension(vectors);
}

/// Basis of span(a) ∩ span(b), in canonical echelon form.
/// Throws std::invalid_argument when the vectors do not share one ambient dimension.
template <class F>
std::vector<Vec<F>> intersect_subspaces(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b) {
  const std::size_t dim = detail::common_dimension(a, b, 0);
  if (a.empty() || b.empty()) return {};

  // Solve sum x_i a_i - sum y_j b_j = 0; each solution gives sum x_i a_i in the intersection.
  Matrix<F> joint(dim, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) joint(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) joint(r, a.size() + j) = -b[j][r];

  std::vector<Vec<F>> images;
  for (const auto& sol : kernel_basis(joint)) {
    Vec<F> w(dim, F(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (is_zero(sol[i])) continue;
      for (std::size_t r = 0; r < dim; ++r) w[r] += sol[i] * a[i][r];
    }
    if (!is_zero_vector(w)) images.push_back(std::move(w));
  }
  return span_basis(images);
}

/// True when span(a) == span(b).
template <class F>
bool same_span(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b) {
  return span_basis(a) == span_basis(b);
}

}  // namespace lieslice
