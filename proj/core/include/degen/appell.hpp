#pragma once

#include <cstddef>
#include <vector>

#include "degen/lambda_poly.hpp"

namespace degen {

/// Degenerate Bernoulli numbers beta_{n,L}, n = 0..max_n.
struct BernoulliTable {
  std::size_t max_n = 0;
  std::vector<LambdaPoly> numbers;

  friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;
};

/// Degenerate Frobenius-Euler numbers H_{n,L}(u) for a fixed rational u != 1.
struct FrobeniusTable {
  std::size_t max_n = 0;
  Rational u;
  std::vector<LambdaPoly> numbers;

  friend bool operator==(const FrobeniusTable&, const FrobeniusTable&) = default;
};

/// n! [t^n] of the inverse of (e_L(t) - 1)/t.
BernoulliTable bernoulli_numbers(std::size_t max_n);

/// beta_{n,L}(x) = sum_l C(n,l) beta_{l,L} (x)_{n-l,L}. Throws InsufficientTable.
XPoly bernoulli_poly(std::size_t n, const BernoulliTable& table);

/// n! [t^n] of (1 - u)/(e_L(t) - u). Throws DegenerateParameter when u = 1.
FrobeniusTable frobenius_numbers(std::size_t max_n, const Rational& u);

/// H_{n,L}(x|u) = sum_k C(n,k) H_{k,L}(u) (x)_{n-k,L}. Throws InsufficientTable.
XPoly frobenius_poly(std::size_t n, const FrobeniusTable& table);

/// sum_n numbers[n] t^n / n! as a series of order `numbers.size() - 1`.
LambdaSeries exponential_series(const std::vector<LambdaPoly>& numbers);

}  // namespace degen
