#pragma once

#include <cstdint>

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// Polynomial in the deformation parameter lambda. Every degenerate number lives here.
using LambdaPoly = Poly<Rational>;
/// Polynomial in x (or t) whose coefficients are polynomials in lambda.
using XPoly = Poly<LambdaPoly>;
using LambdaSeries = Series<LambdaPoly>;

inline LambdaPoly lambda() { return LambdaPoly::variable(); }
inline XPoly x_var() { return XPoly::variable(); }

/// Substitution lambda -> -lambda (sign flip on odd powers).
LambdaPoly negate_lambda(const LambdaPoly& p);
XPoly negate_lambda(const XPoly& p);

/// Specialization lambda = value.
inline Rational at_lambda(const LambdaPoly& p, const Rational& value) { return p.eval(value); }
Poly<Rational> at_lambda(const XPoly& p, const Rational& value);

/// Embeds a lambda-free polynomial into XPoly.
XPoly lift(const Poly<Rational>& p);

/// n! and C(n, k) as exact rationals; C(n, k) = 0 when k > n.
Rational factorial(std::uint64_t n);
Rational binomial(std::uint64_t n, std::uint64_t k);

}  // namespace degen
