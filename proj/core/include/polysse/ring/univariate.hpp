#pragma once

#include <optional>

#include "polysse/ring/domain.hpp"
#include "polysse/ring/polynomial.hpp"

namespace polysse {

using ZPoly = Polynomial<Integer>;  // Z[x]
using QPoly = Polynomial<Rational>;  // Q[x]

inline Integer exact_quotient(const Integer& a, const Integer& b) { return Domain<Integer>::exact_div(a, b); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return Domain<Rational>::exact_div(a, b); }

/// Canonical associate: positive leading coefficient over Z, monic over Q.
/// The zero polynomial is its own canonical form.
ZPoly normalize(const ZPoly& p);
QPoly normalize(const QPoly& p);

/// True iff p is a unit of D[x], i.e. a constant unit of D.
bool is_unit(const ZPoly& p);
bool is_unit(const QPoly& p);

/// True iff p and q differ by a unit factor of D.
template <CoefficientDomain C>
bool are_associates(const Polynomial<C>& p, const Polynomial<C>& q) {
  return normalize(p) == normalize(q);
}

/// Canonical gcd in D[x]. Throws DomainError when both inputs are zero.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// a / b when b divides a exactly in D[x]; nullopt otherwise (or when b = 0).
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
std::optional<QPoly> divide_exact(const QPoly& a, const QPoly& b);

template <CoefficientDomain C>
bool divides(const Polynomial<C>& d, const Polynomial<C>& a) {
  return divide_exact(a, d).has_value();
}

/// Like divide_exact but throws NotDivisible. This is the exact-division
/// capability matrices use for fraction-free elimination.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);
QPoly exact_quotient(const QPoly& a, const QPoly& b);

struct ContentPrimitive {
  Integer content;  // always positive
  ZPoly primitive;
};

/// a = content * primitive. Throws DomainError on the zero polynomial.
ContentPrimitive content_primitive(const ZPoly& a);

/// Gcd of the coefficients (0 for the zero polynomial).
Integer content(const ZPoly& a);

/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

struct DivMod {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division in Q[x]. Throws DomainError when b = 0.
DivMod divmod(const QPoly& a, const QPoly& b);

struct ExtendedGcd {
  QPoly g;  // monic gcd
  QPoly s;
  QPoly t;  // s*a + t*b = g
};

/// Extended Euclid in Q[x]. Throws DomainError when both inputs are zero.
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

QPoly to_rational(const ZPoly& p);

/// The same polynomial over Z, when every coefficient is an integer.
std::optional<ZPoly> to_integer(const QPoly& p);

struct ClearedDenominators {
  Integer denominator;  // positive, lcm of the coefficient denominators
  ZPoly numerator;      // p = numerator / denominator
};

ClearedDenominators clear_denominators(const QPoly& p);

}  // namespace polysse
