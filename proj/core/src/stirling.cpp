#include "degen/stirling.hpp"

#include "degen/errors.hpp"

namespace degen {

namespace {

const LambdaPoly& zero_poly() {
  static const LambdaPoly z;
  return z;
}

const LambdaPoly kLambda = LambdaPoly::variable();

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::S2Lambda: return "s2";
    case Family::S1Lambda: return "s1";
    case Family::BracketLambda: return "bracket";
    case Family::EulerianLambda: return "eulerian";
  }
  return "?";
}

std::string_view to_string(PolyBasis basis) {
  switch (basis) {
    case PolyBasis::Monomial: return "monomial";
    case PolyBasis::FallingClassical: return "falling";
    case PolyBasis::FallingLambda: return "falling-lambda";
  }
  return "?";
}

Triangle::Triangle(Family family, std::vector<std::vector<LambdaPoly>> rows)
    : family_(family), rows_(std::move(rows)) {
  if (rows_.empty()) throw BadParameter("triangle needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw BadLength("triangle row has the wrong length");
  }
}

const LambdaPoly& Triangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) throw IndexError("row " + std::to_string(n) + " beyond triangle size " + std::to_string(size()));
  if (k > n) return zero_poly();
  return rows_[n][k];
}

const std::vector<LambdaPoly>& Triangle::row(std::size_t n) const {
  if (n >= rows_.size()) throw IndexError("row " + std::to_string(n) + " beyond triangle size " + std::to_string(size()));
  return rows_[n];
}

Triangle Triangle::with_entry(std::size_t n, std::size_t k, LambdaPoly value) const {
  if (n >= rows_.size() || k > n) throw IndexError("entry outside the triangle");
  auto rows = rows_;
  rows[n][k] = std::move(value);
  return Triangle(family_, std::move(rows));
}

Triangle s2_triangle(std::size_t rows) {
  std::vector<std::vector<LambdaPoly>> t(rows + 1);
  t[0] = {LambdaPoly(Rational{1})};
  for (std::size_t a = 0; a < rows; ++a) {
    auto& next = t[a + 1];
    next.resize(a + 2);
    for (std::size_t k = 0; k <= a + 1; ++k) {
      LambdaPoly v = k >= 1 ? t[a][k - 1] : LambdaPoly{};
      if (k <= a) v += t[a][k] * (LambdaPoly(Rational{k}) - kLambda * Rational{a});
      next[k] = std::move(v);
    }
  }
  return Triangle(Family::S2Lambda, std::move(t));
}

LambdaPoly s2_explicit(std::size_t n, std::size_t k) {
  if (k > n) throw IndexError("s2_explicit requires k <= n");
  LambdaPoly sum;
  for (std::size_t l = 0; l <= k; ++l) {
    const Rational sign = (k - l) % 2 == 0 ? Rational{1} : Rational{-1};
    sum += falling(Rational{l}, n) * (binomial(k, l) * sign);
  }
  return sum * factorial(k).inverse();
}

LambdaSeries s2_gf_coefficients(std::size_t k, std::size_t order) {
  const LambdaSeries base = degenerate_exp(Rational{1}, order) - LambdaSeries::one(order);
  return pow(base, static_cast<unsigned>(k)) * LambdaPoly(factorial(k).inverse());
}

Triangle s1_triangle(std::size_t rows) {
  std::vector<std::vector<LambdaPoly>> t(rows + 1);
  t[0] = {LambdaPoly(Rational{1})};
  for (std::size_t n = 0; n < rows; ++n) {
    auto& next = t[n + 1];
    next.resize(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      LambdaPoly v = k >= 1 ? t[n][k - 1] : LambdaPoly{};
      if (k <= n) v += t[n][k] * (kLambda * Rational{k} - LambdaPoly(Rational{n}));
      next[k] = std::move(v);
    }
  }
  return Triangle(Family::S1Lambda, std::move(t));
}

Triangle bracket_triangle(std::size_t rows) {
  const Triangle s1 = s1_triangle(rows);
  std::vector<std::vector<LambdaPoly>> t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) t[n].push_back((n - k) % 2 == 0 ? s1.at(n, k) : -s1.at(n, k));
  }
  return Triangle(Family::BracketLambda, std::move(t));
}

LambdaPoly bracket(std::size_t n, std::size_t k) {
  if (k > n) throw IndexError("bracket requires k <= n");
  return bracket_triangle(n).at(n, k);
}

XPoly basis_element(PolyBasis basis, std::size_t n) {
  switch (basis) {
    case PolyBasis::Monomial: return XPoly::monomial(LambdaPoly(Rational{1}), n);
    case PolyBasis::FallingClassical: return factorial_poly(FactorialKind::FallingClassical, n);
    case PolyBasis::FallingLambda: return factorial_poly(FactorialKind::FallingLambda, n);
  }
  return {};
}

XPoly change_basis(const XPoly& p, PolyBasis from, PolyBasis to) {
  if (from == to || p.is_zero()) return p;
  // Expand into monomials, then peel off leading terms in the target basis;
  // every basis element is monic of its own degree.
  XPoly rest;
  for (std::size_t i = 0; i < p.size(); ++i) rest += basis_element(from, i) * p[i];
  if (to == PolyBasis::Monomial) return rest;
  std::vector<LambdaPoly> out(rest.size());
  while (!rest.is_zero()) {
    const std::size_t d = *rest.degree();
    const LambdaPoly c = rest.leading();
    rest -= basis_element(to, d) * c;
    out[d] = c;
  }
  return XPoly(std::move(out));
}

std::vector<std::vector<LambdaPoly>> conversion_matrix(PolyBasis from, PolyBasis to, std::size_t rows) {
  std::vector<std::vector<LambdaPoly>> m(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    const XPoly unit = XPoly::monomial(LambdaPoly(Rational{1}), n);
    const XPoly converted = change_basis(unit, from, to);
    m[n].resize(rows + 1);
    for (std::size_t k = 0; k <= rows; ++k) m[n][k] = converted[k];
  }
  return m;
}

}  // namespace degen
