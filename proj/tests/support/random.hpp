#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polysse/factor/factorization.hpp"

namespace polysse::testing {

/// Seeded generator of small polynomials and polynomial matrices.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  template <CoefficientDomain C>
  C coefficient(int bound) {
    if constexpr (std::is_same_v<C, Rational>) {
      Rational r(uniform(-bound, bound), chance(25) ? uniform(1, 3) : 1);
      r.canonicalize();
      return r;
    } else {
      return C(uniform(-bound, bound));
    }
  }

  /// Degree at most max_degree; zero with probability zero_percent.
  template <CoefficientDomain C>
  Polynomial<C> poly(int max_degree, int bound = 3, int zero_percent = 15) {
    if (chance(zero_percent)) return {};
    std::vector<C> c;
    const int d = uniform(0, max_degree);
    for (int k = 0; k <= d; ++k) c.push_back(coefficient<C>(bound));
    return Polynomial<C>(std::move(c));
  }

  template <CoefficientDomain C>
  PolyMatrix<C> matrix(std::size_t rows, std::size_t cols, int max_degree, int bound = 3, int zero_percent = 15) {
    PolyMatrix<C> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = poly<C>(max_degree, bound, zero_percent);
    }
    return m;
  }

  /// Product of an n x r and an r x n matrix with entry degree at most
  /// left_degree + right_degree; rank at most r.
  template <CoefficientDomain C>
  PolyMatrix<C> product(std::size_t n, std::size_t r, int left_degree, int right_degree) {
    return matrix<C>(n, r, left_degree) * matrix<C>(r, n, right_degree);
  }

  /// Square matrix with A^2 = 0: u * v^T with v^T u = 0.
  template <CoefficientDomain C>
  PolyMatrix<C> square_zero(std::size_t n) {
    const PolyMatrix<C> v = matrix<C>(1, n, 1);
    PolyMatrix<C> u(n, 1);
    if (n >= 2) {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 2));
      const Polynomial<C> s = poly<C>(1, 2, 0);
      u(i, 0) = v(0, i + 1) * s;
      u(i + 1, 0) = -(v(0, i) * s);
    }
    return u * v;
  }

  /// Strictly upper triangular, hence nilpotent.
  template <CoefficientDomain C>
  PolyMatrix<C> strictly_upper(std::size_t n, int max_degree) {
    PolyMatrix<C> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = poly<C>(max_degree);
    }
    return m;
  }

  /// Mixture used for the pipeline corpora: random products of every rank
  /// 0..n, sums of two low-rank products, and nilpotent matrices. Entry
  /// degree at most 3.
  template <CoefficientDomain C>
  PolyMatrix<C> pipeline_sample(std::size_t n, std::size_t index) {
    switch (index % 5) {
      case 0:
      case 1:
        return product<C>(n, index / 5 % (n + 1), 1, 2);
      case 2: {
        const std::size_t r = static_cast<std::size_t>(uniform(0, static_cast<int>(n)));
        return product<C>(n, r / 2 + 1 > n ? n : r / 2 + 1, 1, 1) + product<C>(n, r / 2, 2, 1);
      }
      case 3:
        return chance(50) ? square_zero<C>(n) : strictly_upper<C>(n, 3);
      default: {
        // Rank-degenerate with a nilpotent part: block upper triangular.
        PolyMatrix<C> m = product<C>(n, n > 1 ? n - 1 : 1, 1, 1);
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 0;
        return m;
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polysse::testing
