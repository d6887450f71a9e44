#include "degen/factorial.hpp"

#include <vector>

namespace degen {

namespace {

// Step of the j-th factor (x + step * j): -L, +L, -1 or +1.
LambdaPoly step(FactorialKind kind) {
  switch (kind) {
    case FactorialKind::FallingLambda: return LambdaPoly{Rational{0}, Rational{-1}};
    case FactorialKind::RisingLambda: return LambdaPoly{Rational{0}, Rational{1}};
    case FactorialKind::FallingClassical: return LambdaPoly(Rational{-1});
    case FactorialKind::RisingClassical: return LambdaPoly(Rational{1});
  }
  return {};
}

}  // namespace

std::string_view to_string(FactorialKind kind) {
  switch (kind) {
    case FactorialKind::FallingLambda: return "falling-lambda";
    case FactorialKind::RisingLambda: return "rising-lambda";
    case FactorialKind::FallingClassical: return "falling";
    case FactorialKind::RisingClassical: return "rising";
  }
  return "?";
}

XPoly factorial_poly(FactorialKind kind, std::size_t n) {
  const LambdaPoly s = step(kind);
  XPoly result(LambdaPoly(Rational{1}));
  for (std::size_t j = 0; j < n; ++j) {
    result *= XPoly{s * Rational{j}, LambdaPoly(Rational{1})};
  }
  return result;
}

LambdaPoly factorial_at(FactorialKind kind, const Rational& x0, std::size_t n) {
  const LambdaPoly s = step(kind);
  LambdaPoly result(Rational{1});
  for (std::size_t j = 0; j < n; ++j) {
    result *= LambdaPoly(x0) + s * Rational{j};
  }
  return result;
}

LambdaSeries degenerate_exp(const Rational& x0, std::size_t order) {
  std::vector<LambdaPoly> c;
  c.reserve(order + 1);
  LambdaPoly ff(Rational{1});
  Rational inv_fact{1};
  const LambdaPoly minus_lambda{Rational{0}, Rational{-1}};
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      ff *= LambdaPoly(x0) + minus_lambda * Rational{n - 1};
      inv_fact /= Rational{n};
    }
    c.push_back(ff * inv_fact);
  }
  return LambdaSeries(order, std::move(c));
}

LambdaPoly lambda_binomial(const Rational& k0, std::size_t n) {
  return falling(k0, n) * factorial(n).inverse();
}

}  // namespace degen
