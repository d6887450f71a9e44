#include "degen/wire.hpp"

#include <cctype>
#include <vector>

#include "degen/errors.hpp"

namespace degen {

namespace {

std::string power_suffix(char var, std::size_t degree) {
  if (degree == 0) return {};
  if (degree == 1) return std::string("*") + var;
  return std::string("*") + var + "^" + std::to_string(degree);
}

// Splits on " + " outside parentheses.
std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses");
    if (depth == 0 && text.substr(i, 3) == " + ") {
      out.push_back(text.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  out.push_back(text.substr(start));
  return out;
}

// Strips "*V" or "*V^k" from the end of a term and returns k (0 when absent).
std::size_t take_degree(std::string_view& term, char var) {
  const auto star = term.rfind('*');
  if (star == std::string_view::npos) return 0;
  std::string_view tail = term.substr(star + 1);
  if (tail.empty() || tail.front() != var) return 0;
  term = term.substr(0, star);
  tail.remove_prefix(1);
  if (tail.empty()) return 1;
  if (tail.front() != '^' || tail.size() < 2) throw ParseError("malformed exponent");
  std::size_t k = 0;
  for (char c : tail.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed exponent");
    k = k * 10 + static_cast<std::size_t>(c - '0');
  }
  return k;
}

template <typename C>
void place(std::vector<C>& coeffs, std::size_t degree, C value) {
  if (coeffs.size() <= degree) coeffs.resize(degree + 1);
  coeffs[degree] = std::move(value);
}

}  // namespace

std::string render(const Rational& r) { return r.str(); }

std::string render(const Poly<Rational>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += p[i].str() + power_suffix(var, i);
  }
  return out;
}

std::string render(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LambdaPoly& c = p[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c.is_constant() ? c[0].str() : "(" + render(c, 'L') + ")";
    out += power_suffix('x', i);
  }
  return out;
}

Poly<Rational> parse_poly(std::string_view text, char var) {
  std::vector<Rational> coeffs;
  if (text != "0") {
    for (std::string_view term : split_terms(text)) {
      const std::size_t k = take_degree(term, var);
      place(coeffs, k, parse_rational(term));
    }
  }
  Poly<Rational> p(std::move(coeffs));
  if (render(p, var) != text) throw ParseError("not a canonical polynomial: '" + std::string(text) + "'");
  return p;
}

XPoly parse_xpoly(std::string_view text) {
  std::vector<LambdaPoly> coeffs;
  if (text != "0") {
    for (std::string_view term : split_terms(text)) {
      const std::size_t k = take_degree(term, 'x');
      if (!term.empty() && term.front() == '(') {
        if (term.back() != ')') throw ParseError("malformed coefficient");
        place(coeffs, k, parse_poly(term.substr(1, term.size() - 2), 'L'));
      } else {
        place(coeffs, k, LambdaPoly(parse_rational(term)));
      }
    }
  }
  XPoly p(std::move(coeffs));
  if (render(p) != text) throw ParseError("not a canonical polynomial: '" + std::string(text) + "'");
  return p;
}

}  // namespace degen
