#pragma once

#include <cstddef>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/stirling.hpp"

namespace degen {

/// Degenerate Eulerian numbers <n m>_L for m = 0..n.
struct EulerianRow {
  std::size_t n = 0;
  std::vector<LambdaPoly> numbers;
};

/// A_{n,L}(t) with coefficients in lambda. The outer variable is t.
struct EulerianPoly {
  std::size_t n = 0;
  XPoly poly;
};

/// <n m>_L = sum_{k=0}^{m+1} (-1)^k C(n+1,k) (m-k+1)_{n,L}, with <0 0>_L = 1.
/// Throws IndexError for m > n.
LambdaPoly eulerian_number(std::size_t n, std::size_t m);

EulerianRow eulerian_row(std::size_t n);

/// Rows 0..rows of the explicit sums, as a Triangle of family EulerianLambda.
Triangle eulerian_triangle(std::size_t rows);

/// A_{n,L}(t) = sum_m <n m>_L t^m.
EulerianPoly eulerian_poly_explicit(std::size_t n);

/// A_{n,L}(t) from sum_{k<n} C(n,k) A_{k,L}(t) (t-1)^{n-k-1} <1>_{n-k,L}, A_0 = 1.
EulerianPoly eulerian_poly_recurrence(std::size_t n);

/// A_0 .. A_rows by the recurrence.
std::vector<XPoly> eulerian_polys_recurrence(std::size_t rows);

/// The coefficients of (1-x)^{n+1} sum_{j<=order} (j+1)_{n,L} x^j that the
/// truncation fixes (degrees <= order - (n+1)), as a polynomial in x.
XPoly eulerian_gf_reconstruct(std::size_t n, std::size_t order);

/// n! [x^n] of (t0-1)/(t0 - e_{-L}((t0-1)x)) for n = 0..order.
std::vector<LambdaPoly> eulerian_egf_values(std::size_t order, const Rational& t0);

/// Reconstructs (1-x)^{n+1} sum_{j<=order} (j+1)_{n,L} x^j and compares it with
/// `candidate` on every degree <= order - (n+1). Requires order >= n.
bool eulerian_gf_matches(const XPoly& candidate, std::size_t n, std::size_t order);
bool eulerian_gf_check(std::size_t n, std::size_t order);

/// E_{n,L}(x) from (1-x)^{n+1} sum_{j<=order} (j)_{n,L} x^j.
/// Requires order >= n + 2; throws TruncationTooShort when the exact window
/// above degree order - (n+1) is not zero.
XPoly carlitz_poly(std::size_t n, std::size_t order);

/// Expands (t0-1)/(t0 - e_{-L}((t0-1)x)) in x and compares coefficient n
/// with polys[n](t0)/n! for n <= order. Throws DegenerateParameter at t0 = 1
/// and InsufficientTable when polys is shorter than order + 1.
bool eulerian_egf_matches(const std::vector<XPoly>& polys, std::size_t order, const Rational& t0);
bool eulerian_egf_check(std::size_t order, const Rational& t0);

/// Classical A_n(t) by enumerating all permutations of [n] and counting
/// descents. Throws TooLarge for n > 8.
Poly<Rational> descent_polynomial(std::size_t n);

}  // namespace degen
