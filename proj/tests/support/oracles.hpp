#pragma once

// Reference implementations that share no code path with the library
// algorithms they check: Leibniz determinants, exhaustive minor search, and
// Euclid's algorithm with schoolbook division.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "polysse/matrix/matrix.hpp"
#include "polysse/ring/polynomial.hpp"
#include "polysse/ring/univariate.hpp"

namespace polysse::oracle {

/// Sum over all permutations.
template <Ring R>
R leibniz_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  R total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    R term(1);
    for (std::size_t i = 0; i < n && !(term == R(0)); ++i) term = term * m(i, perm[i]);
    total = inversions % 2 == 0 ? R(total + term) : R(total - term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Index subsets of {0..n-1} with exactly t elements, from bitmasks.
inline std::vector<std::vector<std::size_t>> index_sets(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != t) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <Ring R>
Matrix<R> submatrix(const Matrix<R>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<R> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  }
  return s;
}

/// Largest order of a nonvanishing minor, by exhaustive search.
template <Ring R>
std::size_t brute_rank(const Matrix<R>& m) {
  for (std::size_t t = std::min(m.rows(), m.cols()); t > 0; --t) {
    for (const auto& rows : index_sets(m.rows(), t)) {
      for (const auto& cols : index_sets(m.cols(), t)) {
        if (!(leibniz_det(submatrix(m, rows, cols)) == R(0))) return t;
      }
    }
  }
  return 0;
}

/// Maximal minors in lexicographic column order, via Leibniz.
template <Ring R>
std::vector<R> maximal_minors(const Matrix<R>& m) {
  std::vector<std::size_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<R> out;
  auto cols_list = index_sets(m.cols(), m.rows());
  std::sort(cols_list.begin(), cols_list.end());
  for (const auto& cols : cols_list) out.push_back(leibniz_det(submatrix(m, rows, cols)));
  return out;
}

/// det(I - t m) as a polynomial in t, by Leibniz expansion over R[t].
template <Ring R>
Polynomial<R> reversed_char_poly(const Matrix<R>& m) {
  using P = Polynomial<R>;
  const std::size_t n = m.rows();
  Matrix<P> shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      shifted(i, j) = P(std::vector<R>{i == j ? R(1) : R(0), R(-m(i, j))});
    }
  }
  return leibniz_det(shifted);
}

/// Remainder of schoolbook division over Q.
inline QPoly remainder(QPoly a, const QPoly& b) {
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  const long db = b.degree();
  const Rational lead = b.leading();
  for (long k = static_cast<long>(c.size()) - 1; k >= db; --k) {
    if (c[k] == 0) continue;
    const Rational q = c[k] / lead;
    for (long j = 0; j <= db; ++j) c[k - db + j] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return QPoly(std::move(c));
}

/// Monic gcd over Q[x] by Euclid; zero if both inputs vanish.
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

inline Integer integer_content(const ZPoly& p) {
  Integer g = 0;
  for (const Integer& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// gcd in Z[x]: gcd of contents times the primitive integer multiple of the
/// monic rational gcd, with positive leading coefficient.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  const QPoly g = gcd(to_rational(a), to_rational(b));
  if (g.is_zero()) return ZPoly();
  Integer den = 1;
  for (const Rational& c : g.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly primitive = *to_integer(g.scaled(Rational(den)));
  const Integer pc = integer_content(primitive);
  primitive = *to_integer(to_rational(primitive).scaled(Rational(1) / Rational(pc)));
  Integer content = 0;
  mpz_gcd(content.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
  return primitive.scaled(content);
}

template <class P>
P gcd_all(const std::vector<P>& values) {
  P g;
  for (const P& v : values) g = gcd(g, v);
  return g;
}

inline bool is_unit(const ZPoly& p) { return p.degree() == 0 && abs(p.leading()) == 1; }
inline bool is_unit(const QPoly& p) { return p.degree() == 0; }

/// a = u * b for a unit u.
inline bool associates(const ZPoly& a, const ZPoly& b) { return a == b || a == -b; }
inline bool associates(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scaled(Rational(1) / a.leading()) == b.scaled(Rational(1) / b.leading());
}

}  // namespace polysse::oracle
