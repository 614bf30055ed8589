#include <numeric>
#include <type_traits>

#include "polysse/factor/factorization.hpp"

namespace polysse {

namespace {

QPoly as_rational(const ZPoly& p) { return to_rational(p); }
const QPoly& as_rational(const QPoly& p) { return p; }

// Z_S from the proof of minor left primeness: an n x m matrix whose rows at
// the column indices in `cols` are the rows of adj(C_S), zero elsewhere, so
// that C * Z_S = det(C_S) * I.
template <CoefficientDomain C>
PolyMatrix<C> column_adjugate_lift(const PolyMatrix<C>& c, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> rows(c.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  const PolyMatrix<C> adj = adjugate(c.select(rows, cols));
  PolyMatrix<C> z(c.cols(), c.rows());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t j = 0; j < c.rows(); ++j) z(cols[k], j) = adj(k, j);
  }
  return z;
}

}  // namespace

template <CoefficientDomain C>
std::vector<Polynomial<C>> maximal_minors(const PolyMatrix<C>& a) {
  if (a.rows() > a.cols()) throw RankDeficient("matrix has more rows than columns: " + a.shape());
  std::vector<std::size_t> rows(a.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<Polynomial<C>> out;
  for (const auto& cols : subsets(a.cols(), a.rows())) out.push_back(det(a.select(rows, cols)));
  return out;
}

template <CoefficientDomain C>
Polynomial<C> maximal_minor_gcd(const PolyMatrix<C>& a) {
  Polynomial<C> g;
  for (const auto& minor : maximal_minors(a)) {
    if (minor.is_zero()) continue;
    g = poly_gcd(g, minor);
  }
  if (g.is_zero()) throw RankDeficient("matrix does not have full row rank: " + a.shape());
  return g;
}

template <CoefficientDomain C>
bool is_mlp(const PolyMatrix<C>& c) {
  return is_unit(maximal_minor_gcd(c));
}

template <CoefficientDomain C>
bool verify_certificate(const MlpCertificate<C>& cert) {
  const PolyMatrix<C>& c = cert.subject;
  if (cert.witnesses.empty()) return false;
  Polynomial<C> g;
  for (const auto& w : cert.witnesses) {
    if (w.z.rows() != c.cols() || w.z.cols() != c.rows()) return false;
    if (!(c * w.z == PolyMatrix<C>::identity(c.rows()).scaled(w.d))) return false;
    if (!w.d.is_zero()) g = poly_gcd(g, w.d);
  }
  return !g.is_zero() && is_unit(g);
}

template <CoefficientDomain C>
MlpCertificate<C> mlp_certificate(const PolyMatrix<C>& c) {
  const std::vector<Polynomial<C>> minors = maximal_minors(c);
  if (!is_mlp(c)) throw NotMlp("maximal minors of the " + c.shape() + " matrix have a non-unit common divisor");
  const auto col_sets = subsets(c.cols(), c.rows());

  // Bezout combination sum_S coef_S * minor_S = 1 over Q[x], built by folding
  // the extended gcd over the minors in lexicographic order.
  std::vector<QPoly> coef;
  coef.reserve(minors.size());
  QPoly g;
  for (const auto& minor : minors) {
    const QPoly mq = as_rational(minor);
    if (g.is_zero() && mq.is_zero()) {
      coef.emplace_back();
      continue;
    }
    ExtendedGcd e = extended_gcd(g, mq);
    for (QPoly& a : coef) a = a * e.s;
    coef.push_back(std::move(e.t));
    g = std::move(e.g);
  }

  std::vector<PolyMatrix<C>> lifts;
  lifts.reserve(col_sets.size());
  for (const auto& cols : col_sets) lifts.push_back(column_adjugate_lift(c, cols));

  MlpCertificate<C> cert{c, {}};
  PolyMatrix<C> z0(c.cols(), c.rows());
  if constexpr (std::is_same_v<C, Rational>) {
    for (std::size_t s = 0; s < lifts.size(); ++s) {
      if (!coef[s].is_zero()) z0 = z0 + lifts[s].scaled(coef[s]);
    }
    cert.witnesses.push_back({std::move(z0), QPoly(1)});
  } else {
    // Clear denominators into d0 = lcm, then strip any factor common to d0
    // and every combination coefficient.
    Integer d0 = 1;
    for (const QPoly& a : coef) {
      const Integer den = clear_denominators(a).denominator;
      mpz_lcm(d0.get_mpz_t(), d0.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<ZPoly> icoef;
    icoef.reserve(coef.size());
    Integer common = d0;
    for (const QPoly& a : coef) {
      icoef.push_back(*to_integer(a.scaled(Rational(d0))));
      common = Domain<Integer>::gcd(common, content(icoef.back()));
    }
    d0 /= common;
    for (ZPoly& a : icoef) a = exact_quotient(a, ZPoly(common));
    for (std::size_t s = 0; s < lifts.size(); ++s) {
      if (!icoef[s].is_zero()) z0 = z0 + lifts[s].scaled(icoef[s]);
    }
    cert.witnesses.push_back({z0, ZPoly(d0)});

    // Each extra witness adds one minor to the combination: d_j = d0 + minor.
    // gcd(d0, d0 + m_1, ..., d0 + m_k) = gcd(d0, content(m_1), ..., content(m_k)),
    // so minors are taken while they still lower that running integer gcd.
    Integer running = d0;
    for (std::size_t s = 0; s < minors.size() && running != 1; ++s) {
      const Integer next = Domain<Integer>::gcd(running, content(minors[s]));
      if (next == running) continue;
      cert.witnesses.push_back({z0 + lifts[s], ZPoly(d0) + minors[s]});
      running = next;
    }
  }

  if (!verify_certificate(cert)) throw Error("internal error: MLP certificate failed verification");
  return cert;
}

template <CoefficientDomain C>
PolyMatrix<C> rational_matrix_quotient(const PolyMatrix<C>& a21, const PolyMatrix<C>& a11) {
  if (!a11.is_square()) throw DimensionMismatch("divisor block must be square, got " + a11.shape());
  if (a21.cols() != a11.rows()) {
    throw DimensionMismatch("cannot form " + a21.shape() + " * inverse(" + a11.shape() + ")");
  }
  const Polynomial<C> d = det(a11);
  if (d.is_zero()) throw SingularMatrix("divisor block is singular");
  const PolyMatrix<C> numer = a21 * adjugate(a11);
  PolyMatrix<C> out(numer.rows(), numer.cols());
  for (std::size_t i = 0; i < numer.rows(); ++i) {
    for (std::size_t j = 0; j < numer.cols(); ++j) {
      auto q = divide_exact(numer(i, j), d);
      if (!q) {
        throw NotIntegral("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") of the quotient is not a polynomial");
      }
      out(i, j) = *std::move(q);
    }
  }
  return out;
}

#define POLYSSE_INSTANTIATE(C)                                                                  \
  template std::vector<Polynomial<C>> maximal_minors(const PolyMatrix<C>&);                     \
  template Polynomial<C> maximal_minor_gcd(const PolyMatrix<C>&);                               \
  template bool is_mlp(const PolyMatrix<C>&);                                                   \
  template bool verify_certificate(const MlpCertificate<C>&);                                   \
  template MlpCertificate<C> mlp_certificate(const PolyMatrix<C>&);                             \
  template PolyMatrix<C> rational_matrix_quotient(const PolyMatrix<C>&, const PolyMatrix<C>&);

POLYSSE_INSTANTIATE(Integer)
POLYSSE_INSTANTIATE(Rational)

#undef POLYSSE_INSTANTIATE

}  // namespace polysse
