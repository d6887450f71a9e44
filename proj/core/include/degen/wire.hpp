#pragma once

#include <string>
#include <string_view>

#include "degen/lambda_poly.hpp"

namespace degen {

// Canonical text forms.
//
//   rational   "p" or "p/q", q > 1, lowest terms; zero is "0"
//   poly       terms by strictly increasing degree joined by " + ";
//              a term is "c", "c*V" or "c*V^k" with c a nonzero rational
//              (negative coefficients appear as "+ -c"); zero is "0"
//   xpoly      as poly over "x", where a coefficient that still depends on
//              lambda is written "(<lambda poly>)"
//
// lambda is always written "L"; the outer variable (x or t) is always "x".

std::string render(const Rational& r);
std::string render(const Poly<Rational>& p, char var = 'L');
std::string render(const XPoly& p);

/// Strict parsers: the input must be exactly the canonical rendering.
Poly<Rational> parse_poly(std::string_view text, char var = 'L');
XPoly parse_xpoly(std::string_view text);

}  // namespace degen
