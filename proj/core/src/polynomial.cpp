#include <utility>
#include <vector>

#include "polysse/ring/univariate.hpp"

namespace polysse {

namespace {

Integer integer_pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

ZPoly divide_coefficients(const ZPoly& p, const Integer& d) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const Integer& c : p.coefficients()) out.push_back(Domain<Integer>::exact_div(c, d));
  return ZPoly(std::move(out));
}

// Primitive gcd by the subresultant polynomial remainder sequence. Both
// inputs nonzero; the result is primitive with positive leading coefficient.
ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = content_primitive(a).primitive;
  b = content_primitive(b).primitive;
  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    ZPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = ZPoly(1);
      break;
    }
    a = std::move(b);
    b = divide_coefficients(r, Integer(g * integer_pow(h, static_cast<unsigned long>(delta))));
    g = a.leading();
    if (delta == 0) continue;
    // h <- g^delta / h^(delta - 1)
    h = Domain<Integer>::exact_div(integer_pow(g, static_cast<unsigned long>(delta)),
                                   integer_pow(h, static_cast<unsigned long>(delta - 1)));
  }
  ZPoly out = content_primitive(b).primitive;
  return sgn(out.leading()) < 0 ? -out : out;
}

}  // namespace

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const Integer& c : a.coefficients()) {
    g = Domain<Integer>::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

ContentPrimitive content_primitive(const ZPoly& a) {
  if (a.is_zero()) throw DomainError("content of the zero polynomial");
  Integer c = content(a);
  return {c, divide_coefficients(a, c)};
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const Integer& lb = b.leading();
  long e = a.degree() - b.degree() + 1;
  ZPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    ZPoly s = ZPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = r.scaled(lb) - s * b;
    --e;
  }
  return r.scaled(integer_pow(lb, static_cast<unsigned long>(e)));
}

DivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Rational inv_lead = Rational(1) / b.leading();
  QPoly q;
  QPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    QPoly term = QPoly::monomial(Rational(r.leading() * inv_lead), static_cast<std::size_t>(r.degree() - b.degree()));
    q += term;
    r -= term * b;
  }
  return {std::move(q), std::move(r)};
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("extended gcd of two zero polynomials");
  QPoly r0 = a, r1 = b;
  QPoly s0 = 1, s1 = 0;
  QPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(qr.remainder));
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  const Rational inv = Rational(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

QPoly to_rational(const ZPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const Integer& c : p.coefficients()) out.emplace_back(c);
  return QPoly(std::move(out));
}

std::optional<ZPoly> to_integer(const QPoly& p) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const Rational& c : p.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return ZPoly(std::move(out));
}

ClearedDenominators clear_denominators(const QPoly& p) {
  Integer den = 1;
  for (const Rational& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const Rational& c : p.coefficients()) out.push_back(Integer(c.get_num() * (den / c.get_den())));
  return {den, ZPoly(std::move(out))};
}

ZPoly normalize(const ZPoly& p) {
  if (p.is_zero()) return p;
  return sgn(p.leading()) < 0 ? -p : p;
}

QPoly normalize(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading());
}

bool is_unit(const ZPoly& p) {
  return p.degree() == 0 && Domain<Integer>::is_unit(p.leading());
}

bool is_unit(const QPoly& p) {
  return p.degree() == 0;
}

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const Integer c = Domain<Integer>::gcd(content(a), content(b));
  return subresultant_gcd(a, b).scaled(c);
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  ZPoly g = subresultant_gcd(clear_denominators(a).numerator, clear_denominators(b).numerator);
  return normalize(to_rational(g));
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return ZPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  const Integer& lb = b.leading();
  ZPoly q;
  ZPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!Domain<Integer>::divides(lb, r.leading())) return std::nullopt;
    ZPoly term = ZPoly::monomial(Domain<Integer>::exact_div(r.leading(), lb), static_cast<std::size_t>(r.degree() - b.degree()));
    q += term;
    r -= term * b;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<QPoly> divide_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) return std::nullopt;
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) return std::nullopt;
  return std::move(qr.quotient);
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return *std::move(q);
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return *std::move(q);
}

}  // namespace polysse
