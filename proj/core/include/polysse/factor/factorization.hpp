#pragma once

#include <cstddef>
#include <vector>

#include "polysse/matrix/algorithms.hpp"
#include "polysse/ring/univariate.hpp"

namespace polysse {

template <CoefficientDomain C>
using PolyMatrix = Matrix<Polynomial<C>>;

using ZMatrix = PolyMatrix<Integer>;
using QMatrix = PolyMatrix<Rational>;

/// Witnesses C * Z_j = d_j * I_m whose d_j have unit gcd in D[x].
template <CoefficientDomain C>
struct MlpCertificate {
  struct Witness {
    PolyMatrix<C> z;
    Polynomial<C> d;
  };

  PolyMatrix<C> subject;
  std::vector<Witness> witnesses;
};

/// a = l * u with l square, det(l) an associate of the gcd d of the maximal
/// minors of a, and u minor left prime.
template <CoefficientDomain C>
struct LuFactorization {
  PolyMatrix<C> l;
  PolyMatrix<C> u;
  Polynomial<C> d;
};

/// a = p * q with p of full column rank and q of full row rank, both equal to
/// rank(a). Rank 0 gives an m x 0 and a 0 x n factor.
template <CoefficientDomain C>
struct FullRankFactorization {
  PolyMatrix<C> p;
  PolyMatrix<C> q;
  std::size_t rank = 0;
};

/// Column-style Hermite form over Q[x]: a = reduced * inverse_transform with
/// reduced = [T | 0], T lower echelon with monic pivots, and inverse_transform
/// unimodular over Q[x].
struct ColumnHermite {
  QMatrix reduced;
  QMatrix inverse_transform;
  std::size_t rank = 0;
};

ColumnHermite column_hermite(const QMatrix& a);

/// Maximal (m x m) minors of an m x n matrix, m <= n, over lexicographically
/// ordered column subsets.
template <CoefficientDomain C>
std::vector<Polynomial<C>> maximal_minors(const PolyMatrix<C>& a);

/// Canonical gcd of the maximal minors. Throws RankDeficient when m > n or
/// every maximal minor vanishes.
template <CoefficientDomain C>
Polynomial<C> maximal_minor_gcd(const PolyMatrix<C>& a);

/// Minor left prime test. Throws RankDeficient on input without full row rank.
template <CoefficientDomain C>
bool is_mlp(const PolyMatrix<C>& c);

/// Bezout-style certificate of minor left primeness. Throws NotMlp.
template <CoefficientDomain C>
MlpCertificate<C> mlp_certificate(const PolyMatrix<C>& c);

/// Checks every witness identity by multiplication and the unit gcd of the d_j.
template <CoefficientDomain C>
bool verify_certificate(const MlpCertificate<C>& cert);

/// Extracts the gcd of the maximal minors as a square left factor. Requires an
/// m x n input of rank m. Throws RankDeficient or FactorizationIncomplete.
template <CoefficientDomain C>
LuFactorization<C> lu_gcd_factor(const PolyMatrix<C>& a);

/// a21 * a11^-1 when it is a polynomial matrix. Throws SingularMatrix when a11
/// is singular and NotIntegral when some entry is a proper fraction.
template <CoefficientDomain C>
PolyMatrix<C> rational_matrix_quotient(const PolyMatrix<C>& a21, const PolyMatrix<C>& a11);

/// Full rank factorization of an arbitrary matrix. A square nonsingular input
/// yields (a, I). Throws FactorizationIncomplete if the result cannot be
/// certified.
template <CoefficientDomain C>
FullRankFactorization<C> full_rank_factorization(const PolyMatrix<C>& a);

/// Exact product and rank postconditions of a full rank factorization.
template <CoefficientDomain C>
bool verify_factorization(const PolyMatrix<C>& a, const FullRankFactorization<C>& f);

}  // namespace polysse
