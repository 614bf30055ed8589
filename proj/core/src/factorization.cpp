#include <optional>
#include <type_traits>
#include <utility>
#include <variant>

#include "polysse/factor/factorization.hpp"

namespace polysse {

namespace {

QMatrix to_rational_matrix(const ZMatrix& a) {
  return map_entries(a, [](const ZPoly& p) { return to_rational(p); });
}

const QMatrix& to_rational_matrix(const QMatrix& a) { return a; }

std::optional<ZMatrix> to_integer_matrix(const QMatrix& a) {
  std::vector<ZPoly> out;
  out.reserve(a.rows() * a.cols());
  for (const QPoly& p : a.entries()) {
    auto z = to_integer(p);
    if (!z) return std::nullopt;
    out.push_back(*std::move(z));
  }
  return ZMatrix(a.rows(), a.cols(), std::move(out));
}

// Arithmetic in (Z/M)[x] on integer polynomials with coefficients in [0, M).

ZPoly reduce_mod(const ZPoly& p, const Integer& modulus) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const Integer& c : p.coefficients()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(std::move(r));
  }
  return ZPoly(std::move(out));
}

// Quotient of a by b in (Z/M)[x]; b has leading coefficient with inverse inv_lead.
ZPoly quotient_mod(ZPoly a, const ZPoly& b, const Integer& inv_lead, const Integer& modulus) {
  ZPoly q;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Integer c = a.leading() * inv_lead;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    ZPoly term = ZPoly::monomial(c, static_cast<std::size_t>(a.degree() - b.degree()));
    q += term;
    a = reduce_mod(a - term * b, modulus);
  }
  return q;
}

struct ZeroRow {
  std::size_t index;
};

struct ProperDivisor {
  Integer value;
};

// Row-echelon reduction of u over (Z/M)[x] using only lifted elementary row
// operations, which are unimodular over Z[x]; left absorbs the inverse column
// operations so that left * u is unchanged. Returns a row that vanishes mod M,
// or a proper divisor of M exposed by a non-invertible leading coefficient.
std::variant<ZeroRow, ProperDivisor> eliminate_mod(QMatrix& left, ZMatrix& u, const Integer& modulus) {
  const std::size_t r = u.rows();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < u.cols() && pivot_row < r; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      ZPoly best_red;
      for (std::size_t i = pivot_row; i < r; ++i) {
        ZPoly red = reduce_mod(u(i, col), modulus);
        if (red.is_zero()) continue;
        if (!best || red.degree() < best_red.degree()) {
          best = i;
          best_red = std::move(red);
        }
      }
      if (!best) break;

      const Integer g = Domain<Integer>::gcd(best_red.leading(), modulus);
      if (g != 1) return ProperDivisor{g};
      Integer inv;
      mpz_invert(inv.get_mpz_t(), best_red.leading().get_mpz_t(), modulus.get_mpz_t());

      u.swap_rows(pivot_row, *best);
      left.swap_cols(pivot_row, *best);

      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < r; ++i) {
        const ZPoly red = reduce_mod(u(i, col), modulus);
        if (red.is_zero()) continue;
        const ZPoly q = quotient_mod(red, best_red, inv, modulus);
        if (!q.is_zero()) {
          u.add_row_multiple(i, pivot_row, -q);
          left.add_col_multiple(pivot_row, i, to_rational(q));
        }
        if (!reduce_mod(u(i, col), modulus).is_zero()) cleared = false;
      }
      if (cleared) {
        ++pivot_row;
        break;
      }
    }
  }
  if (pivot_row == r) {
    throw FactorizationIncomplete("row reduction found full rank modulo a divisor of every maximal minor");
  }
  return ZeroRow{pivot_row};
}

struct IntegralFactors {
  ZMatrix left;
  ZMatrix right;
};

// Given a = left * right over Q[x] with right of full row rank and unimodular
// maximal-minor gcd over Q[x], rewrites the pair so that right is an integer
// matrix whose maximal minors have unit gcd in Z[x]. Then left is integral.
IntegralFactors make_integral(QMatrix left, const QMatrix& right) {
  const std::size_t r = right.rows();
  ZMatrix u(r, right.cols());

  // Scale every row to a primitive integer row with a positive leading entry.
  for (std::size_t i = 0; i < r; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < right.cols(); ++j) {
      const Integer dj = clear_denominators(right(i, j)).denominator;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dj.get_mpz_t());
    }
    Integer cont = 0;
    int sign = 0;
    for (std::size_t j = 0; j < right.cols(); ++j) {
      u(i, j) = *to_integer(right(i, j).scaled(Rational(den)));
      cont = Domain<Integer>::gcd(cont, content(u(i, j)));
      if (sign == 0 && !u(i, j).is_zero()) sign = sgn(u(i, j).leading());
    }
    if (cont == 0) throw FactorizationIncomplete("zero row in a full row rank factor");
    const Integer divisor = sign < 0 ? Integer(-cont) : cont;
    for (std::size_t j = 0; j < right.cols(); ++j) u(i, j) = exact_quotient(u(i, j), ZPoly(divisor));
    // right_i = (divisor / den) * u_i
    left.scale_col(i, QPoly(Rational(divisor) / Rational(den)));
  }

  // Saturate: divide out integer primes shared by all maximal minors.
  for (;;) {
    const ZPoly g = maximal_minor_gcd(u);
    if (g.degree() != 0) throw FactorizationIncomplete("maximal minors share a non-constant factor over Z[x]");
    Integer modulus = abs(g.leading());
    if (modulus == 1) break;
    for (;;) {
      auto outcome = eliminate_mod(left, u, modulus);
      if (auto* zero = std::get_if<ZeroRow>(&outcome)) {
        const ZPoly m(modulus);
        for (std::size_t j = 0; j < u.cols(); ++j) u(zero->index, j) = exact_quotient(u(zero->index, j), m);
        left.scale_col(zero->index, QPoly(Rational(modulus)));
        break;
      }
      modulus = std::get<ProperDivisor>(outcome).value;
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = 0;
    while (j < u.cols() && u(i, j).is_zero()) ++j;
    if (j < u.cols() && sgn(u(i, j).leading()) < 0) {
      u.scale_row(i, ZPoly(-1));
      left.scale_col(i, QPoly(-1));
    }
  }

  auto integral_left = to_integer_matrix(left);
  if (!integral_left) throw FactorizationIncomplete("left factor is not integral after saturation");
  return {*std::move(integral_left), std::move(u)};
}

template <CoefficientDomain C>
std::pair<PolyMatrix<C>, PolyMatrix<C>> factor_through_hermite(const PolyMatrix<C>& a, std::size_t& rank_out) {
  const ColumnHermite h = column_hermite(to_rational_matrix(a));
  rank_out = h.rank;
  QMatrix t = h.reduced.col_block(0, h.rank);
  QMatrix w = h.inverse_transform.row_block(0, h.rank);
  if constexpr (std::is_same_v<C, Rational>) {
    return {std::move(t), std::move(w)};
  } else {
    IntegralFactors f = make_integral(std::move(t), w);
    return {std::move(f.left), std::move(f.right)};
  }
}

}  // namespace

ColumnHermite column_hermite(const QMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  QMatrix t = a;
  QMatrix w = QMatrix::identity(n);
  // Invariant: a = t * w. A column operation t <- t*E is paired with w <- E^-1 * w.
  auto subtract_col = [&](std::size_t target, std::size_t source, const QPoly& q) {
    t.add_col_multiple(target, source, -q);
    w.add_row_multiple(source, target, q);
  };

  std::size_t k = 0;
  for (std::size_t i = 0; i < m && k < n; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = k; j < n; ++j) {
        if (t(i, j).is_zero()) continue;
        if (!best || t(i, j).degree() < t(i, *best).degree()) best = j;
      }
      if (!best) break;
      t.swap_cols(k, *best);
      w.swap_rows(k, *best);

      bool cleared = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (t(i, j).is_zero()) continue;
        subtract_col(j, k, divmod(t(i, j), t(i, k)).quotient);
        if (!t(i, j).is_zero()) cleared = false;
      }
      if (!cleared) continue;

      const Rational lead = t(i, k).leading();
      if (lead != 1) {
        t.scale_col(k, QPoly(Rational(1) / lead));
        w.scale_row(k, QPoly(lead));
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (t(i, j).is_zero()) continue;
        const QPoly q = divmod(t(i, j), t(i, k)).quotient;
        if (!q.is_zero()) subtract_col(j, k, q);
      }
      ++k;
      break;
    }
  }
  return {std::move(t), std::move(w), k};
}

template <CoefficientDomain C>
bool verify_factorization(const PolyMatrix<C>& a, const FullRankFactorization<C>& f) {
  const std::size_t r = f.rank;
  if (f.p.rows() != a.rows() || f.p.cols() != r || f.q.rows() != r || f.q.cols() != a.cols()) return false;
  if (!(f.p * f.q == a)) return false;
  return rank(f.p) == r && rank(f.q) == r;
}

template <CoefficientDomain C>
FullRankFactorization<C> full_rank_factorization(const PolyMatrix<C>& a) {
  FullRankFactorization<C> f;
  if (a.is_square() && is_nonsingular(a)) {
    f = {a, PolyMatrix<C>::identity(a.cols()), a.rows()};
  } else {
    auto [p, q] = factor_through_hermite(a, f.rank);
    f.p = std::move(p);
    f.q = std::move(q);
  }
  if (!verify_factorization(a, f)) {
    throw FactorizationIncomplete("full rank factorization of a " + a.shape() + " matrix failed certification");
  }
  return f;
}

template <CoefficientDomain C>
LuFactorization<C> lu_gcd_factor(const PolyMatrix<C>& a) {
  const Polynomial<C> d = maximal_minor_gcd(a);
  if (a.is_square()) return {a, PolyMatrix<C>::identity(a.rows()), d};

  std::size_t r = 0;
  auto [l, u] = factor_through_hermite(a, r);
  if (r != a.rows()) throw RankDeficient("matrix does not have full row rank: " + a.shape());
  LuFactorization<C> out{std::move(l), std::move(u), d};
  if (!(out.l * out.u == a) || !are_associates(det(out.l), d) || !is_mlp(out.u)) {
    throw FactorizationIncomplete("gcd extraction for a " + a.shape() + " matrix failed certification");
  }
  return out;
}

#define POLYSSE_INSTANTIATE(C)                                                                        \
  template bool verify_factorization(const PolyMatrix<C>&, const FullRankFactorization<C>&);          \
  template FullRankFactorization<C> full_rank_factorization(const PolyMatrix<C>&);                    \
  template LuFactorization<C> lu_gcd_factor(const PolyMatrix<C>&);

POLYSSE_INSTANTIATE(Integer)
POLYSSE_INSTANTIATE(Rational)

#undef POLYSSE_INSTANTIATE

}  // namespace polysse
