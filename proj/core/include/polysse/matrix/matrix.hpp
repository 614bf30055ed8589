#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polysse/errors.hpp"

namespace polysse {

/// Element types usable as matrix entries: a commutative ring with exact
/// equality, whose zero and one are R(0) and R(1).
template <class R>
concept Ring = std::copy_constructible<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  R(0);
  R(1);
};

/// Dense row-major rectangular matrix. Zero rows or zero columns are allowed.
template <Ring R>
class Matrix {
 public:
  using value_type = R;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match matrix shape");
  }
  Matrix(std::initializer_list<std::initializer_list<R>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const R> entries() const { return data_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const R& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    return (*this)(i, j);
  }

  bool is_zero() const {
    for (const R& e : data_) {
      if (!(e == R(0))) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Submatrix on the given row and column indices, in the order given.
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = at(row_idx[i], col_idx[j]);
    }
    return s;
  }

  Matrix row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DimensionMismatch("row block out of range");
    return Matrix(count, cols_, std::vector<R>(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_));
  }

  Matrix col_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionMismatch("column block out of range");
    Matrix s(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < count; ++j) s(i, j) = (*this)(i, first + j);
    }
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const R& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) = R((*this)(target, j) + factor * (*this)(source, j));
  }

  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const R& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) = R((*this)(i, target) + factor * (*this)(i, source));
  }

  void scale_row(std::size_t i, const R& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = R((*this)(i, j) * factor);
  }

  void scale_col(std::size_t j, const R& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = R((*this)(i, j) * factor);
  }

  Matrix scaled(const R& factor) const {
    Matrix out = *this;
    for (R& e : out.data_) e = R(e * factor);
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (R& e : out.data_) e = R(-e);
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "matrix addition");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = R(out.data_[k] + b.data_[k]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "matrix subtraction");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = R(out.data_[k] - b.data_[k]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik == R(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = R(out(i, j) + aik * b(k, j));
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& other, const char* what) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionMismatch(std::string(what) + ": " + shape() + " vs " + other.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <Ring R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b;
}

/// k-th power of a square matrix; k = 0 gives the identity.
template <Ring R>
Matrix<R> mat_pow(const Matrix<R>& m, std::size_t k) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix<R> result = Matrix<R>::identity(m.rows());
  Matrix<R> base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Applies f to every entry, producing a matrix over another ring.
template <Ring R, class F>
auto map_entries(const Matrix<R>& m, F&& f) {
  using S = std::decay_t<decltype(f(m(0, 0)))>;
  std::vector<S> out;
  out.reserve(m.rows() * m.cols());
  for (const R& e : m.entries()) out.push_back(f(e));
  return Matrix<S>(m.rows(), m.cols(), std::move(out));
}

}  // namespace polysse
