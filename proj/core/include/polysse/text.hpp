#pragma once

#include <string>
#include <string_view>

#include "polysse/quotient/tri_polynomial.hpp"
#include "polysse/ring/univariate.hpp"

namespace polysse {

/// Grammar: sums and differences of products of factors, where a factor is an
/// integer or rational literal (`7/2`), a variable, or a parenthesized
/// expression, optionally raised to a nonnegative integer power with `^`.
/// Multiplication must be written with `*`; whitespace is ignored.
///
/// Errors are ParseError with the byte offset of the offending token.
ZPoly parse_zpoly(std::string_view text);
QPoly parse_qpoly(std::string_view text);
/// Variables x, y, z.
TriPolynomial parse_tri(std::string_view text);

/// Canonical form: descending degree, explicit signs, unit coefficients
/// omitted, e.g. `2*x^3 - 1/2*x + 4`. parse(to_string(p)) == p.
std::string to_string(const ZPoly& p);
std::string to_string(const QPoly& p);
/// Terms in descending total degree, then descending x, y, z exponents.
std::string to_string(const TriPolynomial& p);
std::string to_string(const QuotientElement& e);
/// Polynomial in t whose coefficients are quotient elements.
std::string to_string(const Polynomial<QuotientElement>& p, char variable = 't');

}  // namespace polysse
