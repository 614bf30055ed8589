#include "polysse/text.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace polysse {

namespace {

constexpr unsigned kMaxExponent = 1U << 16;

// Recursive-descent parser over a value type V supporting ring operations,
// construction from Rational, and a variable lookup.
template <class V, class MakeVariable>
class Parser {
 public:
  Parser(std::string_view text, std::string_view variables, bool integer_literals, MakeVariable make_variable)
      : text_(text), variables_(variables), integer_literals_(integer_literals), make_variable_(make_variable) {}

  V parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    V v = expression();
    skip_space();
    if (!at_end()) unexpected();
    return v;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void unexpected() const {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
  }

  bool starts_factor() const {
    if (at_end()) return false;
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  V expression() {
    skip_space();
    bool negate = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    V acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return acc;
      const bool minus = peek() == '-';
      ++pos_;
      V rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
  }

  V term() {
    V acc = power();
    for (;;) {
      skip_space();
      if (at_end()) return acc;
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor()) {
        throw ParseError("implicit multiplication is not allowed, write '*'", pos_);
      } else {
        return acc;
      }
    }
  }

  V power() {
    V base = primary();
    skip_space();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("exponent must be a nonnegative integer", pos_);
    }
    const Integer e(digits());
    if (e > kMaxExponent) throw ParseError("exponent too large", start);
    V result(1);
    for (unsigned long k = e.get_ui(); k > 0; --k) result = result * base;
    return result;
  }

  V primary() {
    skip_space();
    if (at_end()) unexpected();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      V inner = expression();
      skip_space();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (variables_.find(c) == std::string_view::npos) {
        throw ParseError(std::string("variable '") + c + "' is not allowed in this ring", pos_);
      }
      ++pos_;
      if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
        throw ParseError("implicit multiplication is not allowed, write '*'", pos_);
      }
      return make_variable_(c);
    }
    unexpected();
  }

  V literal() {
    const std::size_t start = pos_;
    Rational value{Integer(digits())};
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a denominator", pos_);
      }
      const Integer den(digits());
      if (den == 0) throw ParseError("zero denominator", start);
      value /= Rational(den);
    }
    if (integer_literals_ && value.get_den() != 1) {
      throw ParseError("non-integer coefficient in an integer polynomial", start);
    }
    return V(value);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::string_view variables_;
  bool integer_literals_;
  MakeVariable make_variable_;
  std::size_t pos_ = 0;
};

template <class V, class MakeVariable>
V parse_with(std::string_view text, std::string_view variables, bool integer_literals, MakeVariable make) {
  return Parser<V, MakeVariable>(text, variables, integer_literals, make).parse();
}

// Appends one signed term; `body` is the unsigned monomial ("" for a constant).
void append_term(std::string& out, const Rational& coeff, const std::string& body) {
  const bool negative = coeff < 0;
  const Rational magnitude = abs(coeff);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += magnitude.get_str();
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += magnitude.get_str() + "*" + body;
  }
}

std::string power_of(char variable, unsigned long k) {
  std::string s(1, variable);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

template <class C>
std::string univariate_to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const C& c = p.coefficients()[k];
    if (c == 0) continue;
    append_term(out, Rational(c), k == 0 ? std::string() : power_of('x', k));
  }
  return out;
}

}  // namespace

QPoly parse_qpoly(std::string_view text) {
  return parse_with<QPoly>(text, "x", false, [](char) { return QPoly::variable(); });
}

ZPoly parse_zpoly(std::string_view text) {
  const QPoly q = parse_with<QPoly>(text, "x", true, [](char) { return QPoly::variable(); });
  return *to_integer(q);
}

TriPolynomial parse_tri(std::string_view text) {
  return parse_with<TriPolynomial>(text, "xyz", false, [](char c) {
    return TriPolynomial::variable(static_cast<std::size_t>(c - 'x'));
  });
}

std::string to_string(const ZPoly& p) { return univariate_to_string(p); }
std::string to_string(const QPoly& p) { return univariate_to_string(p); }

std::string to_string(const TriPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first[0] + a.first[1] + a.first[2];
    const unsigned db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string body;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += power_of(static_cast<char>('x' + i), e[i]);
    }
    append_term(out, c, body);
  }
  return out;
}

std::string to_string(const QuotientElement& e) { return to_string(e.value()); }

std::string to_string(const Polynomial<QuotientElement>& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const TriPolynomial& c = p.coefficients()[k].value();
    if (c.is_zero()) continue;
    const std::string monomial = k == 0 ? std::string() : power_of(variable, k);
    const bool scalar = c.terms().size() == 1 && c.terms().begin()->first == Exponents{0, 0, 0};
    if (scalar) {
      append_term(out, c.terms().begin()->second, monomial);
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      if (!monomial.empty()) out += "*" + monomial;
    }
  }
  return out;
}

}  // namespace polysse
