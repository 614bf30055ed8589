#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "polysse/errors.hpp"

namespace polysse {

/// Degree reported for the zero polynomial.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

/// Dense univariate polynomial over a commutative ring C.
///
/// Coefficients are stored low-to-high (index = degree) and trailing zeros are
/// always stripped, so the zero polynomial has a unique empty representation
/// and equality is plain coefficient comparison. C needs ring operations and
/// construction from int; the gcd machinery in univariate.hpp is only
/// available for the coefficient domains of domain.hpp.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(C(constant)) {}
  Polynomial(C constant) {
    if (!(constant == C(0))) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(C coeff, std::size_t degree) {
    if (coeff == C(0)) return Polynomial();
    std::vector<C> c(degree + 1, C(0));
    c[degree] = std::move(coeff);
    Polynomial p;
    p.coeffs_ = std::move(c);
    return p;
  }

  /// The indeterminate itself.
  static Polynomial variable() { return monomial(C(1), 1); }

  long degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  const C& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  std::span<const C> coefficients() const { return coeffs_; }

  C evaluate(const C& at) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at;
      acc = acc + *it;
    }
    return acc;
  }

  Polynomial scaled(const C& factor) const {
    std::vector<C> out;
    out.reserve(coeffs_.size());
    for (const C& c : coeffs_) out.push_back(C(c * factor));
    return Polynomial(std::move(out));
  }

  /// Multiplication by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> out(k, C(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    Polynomial p;
    p.coeffs_ = std::move(out);
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (C& c : p.coeffs_) c = C(-c);
    return p;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = C(coeffs_[i] + rhs.coeffs_[i]);
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = C(coeffs_[i] - rhs.coeffs_[i]);
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<C> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == C(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] = C(out[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j]);
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

}  // namespace polysse
