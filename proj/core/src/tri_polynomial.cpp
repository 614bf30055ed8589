#include "polysse/quotient/tri_polynomial.hpp"

#include <utility>
#include <vector>

namespace polysse {

TriPolynomial::TriPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0, 0}, constant);
}

TriPolynomial::TriPolynomial(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

TriPolynomial TriPolynomial::monomial(const Rational& coeff, Exponents e) {
  TriPolynomial p;
  p.add_term(e, coeff);
  return p;
}

TriPolynomial TriPolynomial::variable(std::size_t index) {
  if (index > 2) throw DomainError("variable index must be 0, 1 or 2");
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(Rational(1), e);
}

unsigned TriPolynomial::degree_in(std::size_t index) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

Rational TriPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TriPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TriPolynomial TriPolynomial::operator-() const {
  TriPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

TriPolynomial& TriPolynomial::operator+=(const TriPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TriPolynomial& TriPolynomial::operator-=(const TriPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TriPolynomial operator*(const TriPolynomial& lhs, const TriPolynomial& rhs) {
  TriPolynomial out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

TriPolynomial pow(const TriPolynomial& p, unsigned k) {
  TriPolynomial result(1);
  TriPolynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

QuotientElement reduce_mod_sphere(const TriPolynomial& p) { return QuotientElement(p); }

QuotientElement::QuotientElement(const TriPolynomial& p) {
  // z^(2h + b) = (1 - x^2 - y^2)^h * z^b
  const TriPolynomial relation = TriPolynomial(1) - pow(TriPolynomial::variable(0), 2) -
                                 pow(TriPolynomial::variable(1), 2);
  std::vector<TriPolynomial> powers{TriPolynomial(1)};
  for (const auto& [e, c] : p.terms()) {
    const unsigned half = e[2] / 2;
    while (powers.size() <= half) powers.push_back(powers.back() * relation);
    value_ += TriPolynomial::monomial(c, {e[0], e[1], e[2] % 2}) * powers[half];
  }
}

QuotientElement QuotientElement::operator-() const {
  QuotientElement q;
  q.value_ = -value_;
  return q;
}

QuotientElement operator+(const QuotientElement& lhs, const QuotientElement& rhs) {
  QuotientElement q;
  q.value_ = lhs.value_ + rhs.value_;
  return q;
}

QuotientElement operator-(const QuotientElement& lhs, const QuotientElement& rhs) {
  QuotientElement q;
  q.value_ = lhs.value_ - rhs.value_;
  return q;
}

QuotientElement operator*(const QuotientElement& lhs, const QuotientElement& rhs) {
  return QuotientElement(lhs.value_ * rhs.value_);
}

}  // namespace polysse
