#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "degen/poly.hpp"

namespace degen {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// The truncation order N is part of the value. Binary operations produce the
/// minimum of the operand orders, so a prefix computed to a higher order can
/// be combined with a shorter one without error.
template <CommutativeRing R>
class Series {
 public:
  using traits = ring_traits<R>;

  Series() : Series(0) {}

  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1, traits::zero()) {}

  /// Takes coefficients for degrees 0..coeffs.size()-1, zero-padded or cut to `order`.
  Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, traits::zero());
  }

  static Series one(std::size_t order) { return constant(traits::one(), order); }

  static Series constant(R c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  static Series from_poly(const Poly<R>& p, std::size_t order) { return Series(order, p.coefficients()); }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  [[nodiscard]] const std::vector<R>& coefficients() const { return coeffs_; }

  [[nodiscard]] Series truncate(std::size_t order) const {
    return Series(std::min(order, this->order()), coeffs_);
  }

  [[nodiscard]] Poly<R> to_poly() const { return Poly<R>(coeffs_); }

  /// Divides by t^k. The k lowest coefficients must vanish; the order drops by k.
  [[nodiscard]] Series shift_down(std::size_t k) const {
    if (k > order()) throw IndexError("shift exceeds truncation order");
    for (std::size_t i = 0; i < k; ++i) {
      if (!traits::is_zero(coeffs_[i])) throw BadParameter("series is not divisible by the requested power of t");
    }
    return Series(order() - k, std::vector<R>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  /// Multiplicative inverse; requires a unit constant term.
  [[nodiscard]] Series inverse() const {
    if (!traits::is_unit(coeffs_[0])) throw NonUnitConstantTerm("series constant term is not a unit");
    const R inv0 = traits::inverse(coeffs_[0]);
    std::vector<R> q(coeffs_.size(), traits::zero());
    q[0] = inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      R acc = traits::zero();
      for (std::size_t k = 1; k <= n; ++k) acc = acc + coeffs_[k] * q[n - k];
      q[n] = -(acc * inv0);
    }
    return Series(order(), std::move(q));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& a) {
    Series r = a;
    for (R& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend Series operator*(const Series& a, const R& s) {
    Series r = a;
    for (R& c : r.coeffs_) c = c * s;
    return r;
  }
  friend Series operator*(const R& s, const Series& a) { return a * s; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> coeffs_;
};

template <CommutativeRing R>
Series<R> pow(const Series<R>& base, unsigned exponent) {
  Series<R> result = Series<R>::one(base.order());
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

}  // namespace degen
