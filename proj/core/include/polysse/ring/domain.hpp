#pragma once

#include <gmpxx.h>

#include <string_view>

#include "polysse/errors.hpp"

namespace polysse {

using Integer = mpz_class;
using Rational = mpq_class;

enum class DomainTag { Integers, Rationals };

constexpr std::string_view to_string(DomainTag tag) {
  return tag == DomainTag::Integers ? "INTEGERS" : "RATIONALS";
}

/// Coefficient-domain contract for the principal ideal domains D supported as
/// coefficients of D[x]. Only the two specializations below exist.
template <class C>
struct Domain;

template <>
struct Domain<Integer> {
  static constexpr DomainTag tag = DomainTag::Integers;

  static bool is_unit(const Integer& a) { return abs(a) == 1; }

  /// The unit u with u*a canonical (nonnegative).
  static Integer unit_normal(const Integer& a) { return sgn(a) < 0 ? Integer(-1) : Integer(1); }

  static Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  static bool divides(const Integer& d, const Integer& a) {
    if (sgn(d) == 0) return sgn(a) == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }

  static Integer exact_div(const Integer& a, const Integer& d) {
    if (!divides(d, a)) throw NotDivisible("integer division is not exact");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
};

template <>
struct Domain<Rational> {
  static constexpr DomainTag tag = DomainTag::Rationals;

  static bool is_unit(const Rational& a) { return sgn(a) != 0; }

  /// Every nonzero rational is a unit, so the canonical associate is 1.
  static Rational unit_normal(const Rational& a) {
    if (sgn(a) == 0) return Rational(1);
    return Rational(1) / a;
  }

  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw DomainError("inverse of zero");
    return Rational(1) / a;
  }

  static bool divides(const Rational& d, const Rational& a) { return sgn(d) != 0 || sgn(a) == 0; }

  static Rational exact_div(const Rational& a, const Rational& d) {
    if (sgn(d) == 0) throw NotDivisible("division by zero");
    return a / d;
  }
};

template <class C>
concept CoefficientDomain = requires { Domain<C>::tag; };

}  // namespace polysse
