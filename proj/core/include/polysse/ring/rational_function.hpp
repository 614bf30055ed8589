#pragma once

#include "polysse/ring/univariate.hpp"

namespace polysse {

/// Element of Q(x), the common fraction field of Z[x] and Q[x].
///
/// Always reduced: gcd(numerator, denominator) = 1 and the denominator is
/// monic, so two equal rational functions have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(Rational(c)), den_(1) {}
  RationalFunction(const QPoly& p) : num_(p), den_(1) {}
  RationalFunction(const QPoly& num, const QPoly& den);

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DomainError on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

inline RationalFunction to_fraction(const QPoly& p) { return RationalFunction(p); }
inline RationalFunction to_fraction(const ZPoly& p) { return RationalFunction(to_rational(p)); }
inline Rational to_fraction(const Integer& a) { return Rational(a); }
inline Rational to_fraction(const Rational& a) { return a; }

}  // namespace polysse
