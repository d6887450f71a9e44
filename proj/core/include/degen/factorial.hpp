#pragma once

#include <cstddef>
#include <string_view>

#include "degen/lambda_poly.hpp"

namespace degen {

enum class FactorialKind {
  FallingLambda,     // x(x - L)(x - 2L)...(x - (n-1)L)
  RisingLambda,      // x(x + L)(x + 2L)...(x + (n-1)L)
  FallingClassical,  // x(x - 1)...(x - n + 1)
  RisingClassical,   // x(x + 1)...(x + n - 1)
};

std::string_view to_string(FactorialKind kind);

/// The monic degree-n factorial polynomial in symbolic x; n = 0 gives 1.
XPoly factorial_poly(FactorialKind kind, std::size_t n);

/// The same product at a concrete x0, keeping lambda symbolic.
LambdaPoly factorial_at(FactorialKind kind, const Rational& x0, std::size_t n);

/// Shorthands for the two lambda-deformed products.
inline LambdaPoly falling(const Rational& x0, std::size_t n) { return factorial_at(FactorialKind::FallingLambda, x0, n); }
inline LambdaPoly rising(const Rational& x0, std::size_t n) { return factorial_at(FactorialKind::RisingLambda, x0, n); }

/// Degenerate exponential e_L^{x0}(t) = sum_n (x0)_{n,L} t^n / n!, truncated at `order`.
LambdaSeries degenerate_exp(const Rational& x0, std::size_t order);

/// Degenerate binomial coefficient (k0)_{n,L} / n!.
LambdaPoly lambda_binomial(const Rational& k0, std::size_t n);

}  // namespace degen
