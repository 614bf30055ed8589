#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "polysse/ring/domain.hpp"

namespace polysse {

/// Exponents of x, y, z.
using Exponents = std::array<unsigned, 3>;

/// Sparse polynomial in x, y, z with rational coefficients. No zero
/// coefficient is ever stored.
class TriPolynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  TriPolynomial() = default;
  TriPolynomial(int constant) : TriPolynomial(Rational(constant)) {}
  TriPolynomial(const Rational& constant);
  explicit TriPolynomial(Terms terms);

  static TriPolynomial monomial(const Rational& coeff, Exponents e);
  /// 0 -> x, 1 -> y, 2 -> z.
  static TriPolynomial variable(std::size_t index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree_in(std::size_t index) const;
  Rational coeff(const Exponents& e) const;

  TriPolynomial operator-() const;
  TriPolynomial& operator+=(const TriPolynomial& rhs);
  TriPolynomial& operator-=(const TriPolynomial& rhs);

  friend TriPolynomial operator+(TriPolynomial lhs, const TriPolynomial& rhs) { return lhs += rhs; }
  friend TriPolynomial operator-(TriPolynomial lhs, const TriPolynomial& rhs) { return lhs -= rhs; }
  friend TriPolynomial operator*(const TriPolynomial& lhs, const TriPolynomial& rhs);
  friend bool operator==(const TriPolynomial& lhs, const TriPolynomial& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

TriPolynomial pow(const TriPolynomial& p, unsigned k);

/// Element of Q[x,y,z]/(x^2+y^2+z^2-1), held in the normal form where every
/// monomial has z-degree at most 1.
class QuotientElement {
 public:
  QuotientElement() = default;
  QuotientElement(int constant) : value_(constant) {}
  QuotientElement(const Rational& constant) : value_(constant) {}
  /// Reduces p to normal form.
  explicit QuotientElement(const TriPolynomial& p);

  const TriPolynomial& value() const { return value_; }

  QuotientElement operator-() const;
  friend QuotientElement operator+(const QuotientElement& lhs, const QuotientElement& rhs);
  friend QuotientElement operator-(const QuotientElement& lhs, const QuotientElement& rhs);
  friend QuotientElement operator*(const QuotientElement& lhs, const QuotientElement& rhs);
  friend bool operator==(const QuotientElement& lhs, const QuotientElement& rhs) {
    return lhs.value_ == rhs.value_;
  }

 private:
  TriPolynomial value_;
};

/// Normal form modulo the sphere relation, by rewriting z^2 -> 1 - x^2 - y^2.
QuotientElement reduce_mod_sphere(const TriPolynomial& p);

}  // namespace polysse
