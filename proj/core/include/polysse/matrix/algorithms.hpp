#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "polysse/matrix/matrix.hpp"
#include "polysse/ring/polynomial.hpp"
#include "polysse/ring/rational_function.hpp"

namespace polysse {

/// Rings providing exact division by a certified divisor.
template <class R>
concept ExactDivisionRing = Ring<R> && requires(const R& a, const R& b) {
  { exact_quotient(a, b) } -> std::convertible_to<R>;
};

/// Integral domains with an embedding into their fraction field.
template <class R>
concept FractionFieldRing = Ring<R> && requires(const R& a) {
  to_fraction(a);
  to_fraction(a) / to_fraction(a);
};

/// A t x t minor: strictly increasing row and column index sequences.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// All t-element subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > n) return out;
  std::vector<std::size_t> cur(t);
  for (std::size_t i = 0; i < t; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Laplace expansion along the first row. Works over any commutative ring.
template <Ring R>
R det_cofactor(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return R(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  R acc(0);
  std::vector<std::size_t> rows(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i + 1;
  std::vector<std::size_t> cols(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == R(0)) continue;
    for (std::size_t c = 0, k = 0; c < n; ++c) {
      if (c != j) cols[k++] = c;
    }
    R term = R(m(0, j) * det_cofactor(m.select(rows, cols)));
    acc = (j % 2 == 0) ? R(acc + term) : R(acc - term);
  }
  return acc;
}

/// Fraction-free (Bareiss) elimination with row pivoting.
template <ExactDivisionRing R>
R det_bareiss(Matrix<R> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == R(0)) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == R(0)) ++p;
      if (p == n) return R(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(R(m(i, j) * m(k, k) - m(i, k) * m(k, j)), prev);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? R(-d) : d;
}

/// Exact determinant. Fraction-free elimination when the ring supports exact
/// division and n > 4; cofactor expansion otherwise.
template <Ring R>
R det(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if constexpr (ExactDivisionRing<R>) {
    if (m.rows() > 4) return det_bareiss(m);
  }
  return det_cofactor(m);
}

template <Ring R>
R minor(const Matrix<R>& m, const MinorIndex& idx) {
  if (idx.rows.empty() || idx.rows.size() != idx.cols.size()) {
    throw DomainError("minor index sets must be nonempty and of equal length");
  }
  auto check = [](const std::vector<std::size_t>& ix, std::size_t bound) {
    for (std::size_t k = 0; k < ix.size(); ++k) {
      if (ix[k] >= bound || (k > 0 && ix[k] <= ix[k - 1])) {
        throw DomainError("minor indices must be strictly increasing and in range");
      }
    }
  };
  check(idx.rows, m.rows());
  check(idx.cols, m.cols());
  return det(m.select(idx.rows, idx.cols));
}

/// t-th compound matrix: all t x t minors, rows and columns indexed by
/// lexicographically ordered subsets.
template <Ring R>
Matrix<R> compound(const Matrix<R>& m, std::size_t t) {
  if (t == 0 || t > std::min(m.rows(), m.cols())) throw DomainError("compound order out of range");
  const auto row_sets = subsets(m.rows(), t);
  const auto col_sets = subsets(m.cols(), t);
  Matrix<R> out(row_sets.size(), col_sets.size());
  for (std::size_t i = 0; i < row_sets.size(); ++i) {
    for (std::size_t j = 0; j < col_sets.size(); ++j) out(i, j) = det(m.select(row_sets[i], col_sets[j]));
  }
  return out;
}

/// Transposed cofactor matrix: m * adjugate(m) = det(m) * I.
template <Ring R>
Matrix<R> adjugate(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionMismatch("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = R(1);
    return adj;
  }
  std::vector<std::size_t> rows(n - 1), cols(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0, k = 0; r < n; ++r) {
      if (r != i) rows[k++] = r;
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (c != j) cols[k++] = c;
      }
      R cof = det(m.select(rows, cols));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : R(-cof);
    }
  }
  return adj;
}

/// det(I - t*m) as a polynomial in a fresh indeterminate t.
///
/// Uses the division-free Berkowitz recursion, so it is valid over any
/// commutative ring. Berkowitz yields the coefficients of det(tI - m) from the
/// leading one down; read low-to-high they are exactly det(I - t*m).
template <Ring R>
Polynomial<R> char_poly_reversed(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial<R>(R(1));
  std::vector<R> p{R(1), R(-m(n - 1, n - 1))};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - 1 - k;  // order of the trailing block
    // Toeplitz column: 1, -a_kk, -R C, -R A1 C, ..., -R A1^(s-1) C
    std::vector<R> col;
    col.reserve(s + 2);
    col.push_back(R(1));
    col.push_back(R(-m(k, k)));
    std::vector<R> v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = m(k + 1 + i, k);
    for (std::size_t power = 0; power < s; ++power) {
      R dot(0);
      for (std::size_t i = 0; i < s; ++i) dot = R(dot + m(k, k + 1 + i) * v[i]);
      col.push_back(R(-dot));
      if (power + 1 < s) {
        std::vector<R> next(s, R(0));
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = 0; j < s; ++j) next[i] = R(next[i] + m(k + 1 + i, k + 1 + j) * v[j]);
        }
        v = std::move(next);
      }
    }
    std::vector<R> q(s + 2, R(0));
    for (std::size_t i = 0; i < s + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, s); ++j) q[i] = R(q[i] + col[i - j] * p[j]);
    }
    p = std::move(q);
  }
  return Polynomial<R>(std::move(p));
}

/// Rank by Gaussian elimination over a field.
template <class F>
std::size_t field_rank(Matrix<F> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == F(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const F inv = F(1) / m(rank, col);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == F(0)) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Rank over the fraction field (maximal order of a nonvanishing minor).
template <FractionFieldRing R>
std::size_t rank(const Matrix<R>& m) {
  return field_rank(map_entries(m, [](const R& e) { return to_fraction(e); }));
}

template <Ring R>
bool is_nonsingular(const Matrix<R>& m) {
  return m.is_square() && !(det(m) == R(0));
}

}  // namespace polysse
