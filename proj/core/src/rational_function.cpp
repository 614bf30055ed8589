#include "polysse/ring/rational_function.hpp"

namespace polysse {

RationalFunction::RationalFunction(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  const QPoly g = poly_gcd(num, den);
  num_ = exact_quotient(num, g);
  den_ = exact_quotient(den, g);
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
  }
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace polysse
