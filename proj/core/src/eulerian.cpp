#include "degen/eulerian.hpp"

#include <algorithm>
#include <numeric>

#include "degen/errors.hpp"
#include "degen/factorial.hpp"

namespace degen {

namespace {

// (j)_{n,L} for j = 0..count-1.
std::vector<LambdaPoly> falling_values(std::size_t n, std::size_t count) {
  std::vector<LambdaPoly> v;
  v.reserve(count);
  for (std::size_t j = 0; j < count; ++j) v.push_back(falling(Rational{j}, n));
  return v;
}

std::vector<LambdaPoly> row_from_values(std::size_t n, const std::vector<LambdaPoly>& ff) {
  if (n == 0) return {LambdaPoly(Rational{1})};
  std::vector<LambdaPoly> row(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    LambdaPoly sum;
    for (std::size_t k = 0; k <= m + 1; ++k) {
      const Rational c = k % 2 == 0 ? binomial(n + 1, k) : -binomial(n + 1, k);
      sum += ff[m + 1 - k] * c;
    }
    row[m] = std::move(sum);
  }
  return row;
}

XPoly poly_from_numbers(const std::vector<LambdaPoly>& numbers) { return XPoly(numbers); }

// (1 - x)^{n+1} as a series of the given order.
LambdaSeries one_minus_x_power(std::size_t n, std::size_t order) {
  const Poly<Rational> base{Rational{1}, Rational{-1}};
  return LambdaSeries::from_poly(lift(pow(base, static_cast<unsigned>(n + 1))), order);
}

// (1 - x)^{n+1} sum_{j<=order} (j + shift)_{n,L} x^j, exact through degree `order`.
LambdaSeries cleared_sum(std::size_t n, std::size_t order, std::size_t shift) {
  std::vector<LambdaPoly> c;
  c.reserve(order + 1);
  for (std::size_t j = 0; j <= order; ++j) c.push_back(falling(Rational{j + shift}, n));
  return LambdaSeries(order, std::move(c)) * one_minus_x_power(n, order);
}

}  // namespace

LambdaPoly eulerian_number(std::size_t n, std::size_t m) {
  if (m > n) throw IndexError("eulerian_number requires m <= n");
  if (n == 0) return LambdaPoly(Rational{1});
  LambdaPoly sum;
  for (std::size_t k = 0; k <= m + 1; ++k) {
    const Rational c = k % 2 == 0 ? binomial(n + 1, k) : -binomial(n + 1, k);
    sum += falling(Rational{m + 1 - k}, n) * c;
  }
  return sum;
}

EulerianRow eulerian_row(std::size_t n) {
  return EulerianRow{n, row_from_values(n, falling_values(n, n + 2))};
}

Triangle eulerian_triangle(std::size_t rows) {
  std::vector<std::vector<LambdaPoly>> t;
  t.reserve(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) t.push_back(eulerian_row(n).numbers);
  return Triangle(Family::EulerianLambda, std::move(t));
}

EulerianPoly eulerian_poly_explicit(std::size_t n) {
  return EulerianPoly{n, poly_from_numbers(eulerian_row(n).numbers)};
}

std::vector<XPoly> eulerian_polys_recurrence(std::size_t rows) {
  const XPoly t_minus_1{LambdaPoly(Rational{-1}), LambdaPoly(Rational{1})};
  std::vector<XPoly> a;
  a.reserve(rows + 1);
  a.emplace_back(LambdaPoly(Rational{1}));
  // powers[i] = (t - 1)^i
  std::vector<XPoly> powers{XPoly(LambdaPoly(Rational{1}))};
  for (std::size_t n = 1; n <= rows; ++n) {
    powers.push_back(powers.back() * t_minus_1);
    XPoly sum;
    for (std::size_t k = 0; k < n; ++k) {
      sum += a[k] * powers[n - k - 1] * (rising(Rational{1}, n - k) * binomial(n, k));
    }
    a.push_back(std::move(sum));
  }
  return a;
}

EulerianPoly eulerian_poly_recurrence(std::size_t n) {
  return EulerianPoly{n, eulerian_polys_recurrence(n).back()};
}

XPoly eulerian_gf_reconstruct(std::size_t n, std::size_t order) {
  if (order < n) throw BadParameter("eulerian_gf_check requires order >= n");
  if (order < n + 1) return {};
  return cleared_sum(n, order, 1).truncate(order - (n + 1)).to_poly();
}

bool eulerian_gf_matches(const XPoly& candidate, std::size_t n, std::size_t order) {
  const XPoly reconstructed = eulerian_gf_reconstruct(n, order);
  if (order < n + 1) return true;
  for (std::size_t d = 0; d <= order - (n + 1); ++d) {
    if (reconstructed[d] != candidate[d]) return false;
  }
  return true;
}

bool eulerian_gf_check(std::size_t n, std::size_t order) {
  return eulerian_gf_matches(eulerian_poly_explicit(n).poly, n, order);
}

XPoly carlitz_poly(std::size_t n, std::size_t order) {
  if (order < n + 2) throw BadParameter("carlitz_poly requires order >= n + 2");
  const LambdaSeries product = cleared_sum(n, order, 0);
  const std::size_t keep = order - (n + 1);
  for (std::size_t d = keep + 1; d <= order; ++d) {
    if (!product[d].is_zero()) throw TruncationTooShort("Carlitz polynomial not determined at this order");
  }
  return product.truncate(keep).to_poly();
}

std::vector<LambdaPoly> eulerian_egf_values(std::size_t order, const Rational& t0) {
  if (t0 == Rational{1}) throw DegenerateParameter("eulerian_egf_check requires t0 != 1");
  const Rational shift = t0 - Rational{1};
  // e_{-L}((t0-1)x) = sum_n <1>_{n,L} (t0-1)^n x^n / n!
  std::vector<LambdaPoly> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(rising(Rational{1}, n) * (shift.pow(static_cast<unsigned>(n)) * factorial(n).inverse()));
  }
  const LambdaSeries denom = LambdaSeries::constant(LambdaPoly(t0), order) - LambdaSeries(order, std::move(c));
  const LambdaSeries gf = denom.inverse() * LambdaPoly(shift);
  std::vector<LambdaPoly> values;
  values.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) values.push_back(gf[n] * factorial(n));
  return values;
}

bool eulerian_egf_matches(const std::vector<XPoly>& polys, std::size_t order, const Rational& t0) {
  const std::vector<LambdaPoly> values = eulerian_egf_values(order, t0);
  if (polys.size() <= order) throw InsufficientTable("not enough Eulerian polynomials for this order");
  for (std::size_t n = 0; n <= order; ++n) {
    if (values[n] != polys[n].eval(LambdaPoly(t0))) return false;
  }
  return true;
}

bool eulerian_egf_check(std::size_t order, const Rational& t0) {
  std::vector<XPoly> polys;
  polys.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) polys.push_back(eulerian_poly_explicit(n).poly);
  return eulerian_egf_matches(polys, order, t0);
}

Poly<Rational> descent_polynomial(std::size_t n) {
  if (n > 8) throw TooLarge("descent enumeration is limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> counts(n == 0 ? 1 : n, 0);
  do {
    std::size_t descents = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (perm[i] > perm[i + 1]) ++descents;
    }
    ++counts[descents];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(v);
  return Poly<Rational>(std::move(c));
}

}  // namespace degen
