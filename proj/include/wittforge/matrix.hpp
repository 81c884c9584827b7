#pragma once

// Dense matrices over any ring element type with value semantics. Entries of
// a matrix share one ring; the matrix keeps a zero element so that empty
// shapes still know their ring.

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wittforge/error.hpp"
#include "wittforge/field.hpp"

namespace wittforge {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "addition");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = m.data_[i] + b.data_[i];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix product shape mismatch " + a.shape() + " * " + b.shape());
    Matrix m(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) m(i, j) = m(i, j) + x * b(k, j);
      }
    return m;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) fail(ErrorCode::InvalidArgument, "block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }

  Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r + i, c + j);
    return m;
  }

  Matrix map(const std::function<T(const T&)>& f, const T& new_zero) const {
    Matrix m(rows_, cols_, new_zero);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = f(data_[i]);
    return m;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).to_string();
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& b, const char* what) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorCode::InvalidArgument, std::string("shape mismatch in ") + what + ": " + shape() + " vs " + b.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

/// Block-diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

// ---------------------------------------------------------------------------
// Linear algebra over a field.

using FMatrix = Matrix<Scalar>;

inline FMatrix zeros(FieldRef f, std::size_t r, std::size_t c) { return FMatrix(r, c, f->zero()); }
inline FMatrix identity(FieldRef f, std::size_t n) { return FMatrix::identity(n, f->zero(), f->one()); }

inline FMatrix from_ints(FieldRef f, const std::vector<std::vector<long>>& rows) {
  FMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f->zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f->from_int(rows[i][j]);
  return m;
}

struct RowEchelon {
  FMatrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  Scalar determinant;                 // meaningful for square input only
};

inline RowEchelon row_reduce(FMatrix m) {
  const Scalar zero = m.zero();
  FieldRef f = zero.field();
  Scalar det = f->one();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
      det = -det;
    }
    const Scalar p = m(row, col);
    det = det * p;
    const Scalar inv = p.inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  if (m.rows() != m.cols() || pivots.size() != m.rows()) det = zero;
  return {std::move(m), std::move(pivots), det};
}

inline std::size_t rank(const FMatrix& m) { return row_reduce(m).pivots.size(); }

inline Scalar determinant(const FMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return m.zero().field()->one();
  return row_reduce(m).determinant;
}

inline std::optional<FMatrix> inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  FieldRef f = m.zero().field();
  FMatrix aug(n, 2 * n, f->zero());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, identity(f, n));
  auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] >= n)) return std::nullopt;
  return ech.reduced.block(0, n, n, n);
}

/// Columns spanning the right kernel.
inline FMatrix kernel(const FMatrix& m) {
  FieldRef f = m.zero().field();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FMatrix k(m.cols(), free_cols.size(), f->zero());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = f->one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k(ech.pivots[r], j) = -ech.reduced(r, free_cols[j]);
  }
  return k;
}

}  // namespace wittforge
