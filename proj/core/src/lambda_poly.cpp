#include "degen/lambda_poly.hpp"

#include <gmpxx.h>

namespace degen {

LambdaPoly negate_lambda(const LambdaPoly& p) {
  std::vector<Rational> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return LambdaPoly(std::move(c));
}

XPoly negate_lambda(const XPoly& p) {
  return p.map([](const LambdaPoly& c) { return negate_lambda(c); });
}

Poly<Rational> at_lambda(const XPoly& p, const Rational& value) {
  return p.map([&](const LambdaPoly& c) { return c.eval(value); });
}

XPoly lift(const Poly<Rational>& p) {
  return p.map([](const Rational& c) { return LambdaPoly(c); });
}

Rational factorial(std::uint64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Rational{};
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

}  // namespace degen
