#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "degen/factorial.hpp"
#include "degen/lambda_poly.hpp"

namespace degen {

enum class Family { S2Lambda, S1Lambda, BracketLambda, EulerianLambda };

std::string_view to_string(Family family);

/// Immutable lower-triangular table of lambda-polynomials, rows 0..size().
/// Entries with k > n read as zero.
class Triangle {
 public:
  Triangle(Family family, std::vector<std::vector<LambdaPoly>> rows);

  [[nodiscard]] Family family() const { return family_; }
  /// Largest row index N.
  [[nodiscard]] std::size_t size() const { return rows_.size() - 1; }

  /// Throws IndexError when n exceeds the table.
  [[nodiscard]] const LambdaPoly& at(std::size_t n, std::size_t k) const;
  [[nodiscard]] const std::vector<LambdaPoly>& row(std::size_t n) const;

  /// Copy with one entry replaced.
  [[nodiscard]] Triangle with_entry(std::size_t n, std::size_t k, LambdaPoly value) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  Family family_;
  std::vector<std::vector<LambdaPoly>> rows_;
};

/// S2_L(n,k) by S2(a+1,k) = S2(a,k-1) + (k - aL) S2(a,k).
Triangle s2_triangle(std::size_t rows);

/// S2_L(n,k) = (1/k!) sum_l C(k,l)(-1)^{k-l}(l)_{n,L}; throws IndexError for k > n.
LambdaPoly s2_explicit(std::size_t n, std::size_t k);

/// (e_L(t) - 1)^k / k!, truncated at `order`.
LambdaSeries s2_gf_coefficients(std::size_t k, std::size_t order);

/// S1_L(n,k) by S1(n+1,k) = S1(n,k-1) + (kL - n) S1(n,k).
Triangle s1_triangle(std::size_t rows);

/// Unsigned brackets (-1)^{n-k} S1_L(n,k).
Triangle bracket_triangle(std::size_t rows);
LambdaPoly bracket(std::size_t n, std::size_t k);

enum class PolyBasis { Monomial, FallingClassical, FallingLambda };

std::string_view to_string(PolyBasis basis);

/// The n-th element of a basis as a polynomial in x.
XPoly basis_element(PolyBasis basis, std::size_t n);

/// Re-expresses p, given as coefficients in `from`, as coefficients in `to`.
XPoly change_basis(const XPoly& p, PolyBasis from, PolyBasis to);

/// Row n holds the `to`-coordinates of the n-th `from` basis element, n <= rows.
std::vector<std::vector<LambdaPoly>> conversion_matrix(PolyBasis from, PolyBasis to, std::size_t rows);

}  // namespace degen
