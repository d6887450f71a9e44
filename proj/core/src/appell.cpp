#include "degen/appell.hpp"

#include "degen/errors.hpp"
#include "degen/factorial.hpp"

namespace degen {

namespace {

std::vector<LambdaPoly> egf_coefficients(const LambdaSeries& s) {
  std::vector<LambdaPoly> out;
  out.reserve(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(s[n] * factorial(n));
  return out;
}

// sum_k C(n,k) numbers[k] (x)_{n-k,L}
XPoly appell_poly(std::size_t n, const std::vector<LambdaPoly>& numbers) {
  XPoly p;
  for (std::size_t k = 0; k <= n; ++k) {
    p += factorial_poly(FactorialKind::FallingLambda, n - k) * (numbers[k] * binomial(n, k));
  }
  return p;
}

}  // namespace

BernoulliTable bernoulli_numbers(std::size_t max_n) {
  const LambdaSeries denom = (degenerate_exp(Rational{1}, max_n + 1) - LambdaSeries::one(max_n + 1)).shift_down(1);
  return BernoulliTable{max_n, egf_coefficients(denom.inverse())};
}

XPoly bernoulli_poly(std::size_t n, const BernoulliTable& table) {
  if (table.max_n < n || table.numbers.size() <= n) throw InsufficientTable("Bernoulli table too short");
  return appell_poly(n, table.numbers);
}

FrobeniusTable frobenius_numbers(std::size_t max_n, const Rational& u) {
  if (u == Rational{1}) throw DegenerateParameter("Frobenius-Euler parameter u must differ from 1");
  const LambdaSeries denom = degenerate_exp(Rational{1}, max_n) - LambdaSeries::constant(LambdaPoly(u), max_n);
  const LambdaSeries gf = denom.inverse() * LambdaPoly(Rational{1} - u);
  return FrobeniusTable{max_n, u, egf_coefficients(gf)};
}

XPoly frobenius_poly(std::size_t n, const FrobeniusTable& table) {
  if (table.max_n < n || table.numbers.size() <= n) throw InsufficientTable("Frobenius-Euler table too short");
  return appell_poly(n, table.numbers);
}

LambdaSeries exponential_series(const std::vector<LambdaPoly>& numbers) {
  if (numbers.empty()) throw BadLength("empty coefficient list");
  std::vector<LambdaPoly> c;
  c.reserve(numbers.size());
  for (std::size_t n = 0; n < numbers.size(); ++n) c.push_back(numbers[n] * factorial(n).inverse());
  return LambdaSeries(numbers.size() - 1, std::move(c));
}

}  // namespace degen
