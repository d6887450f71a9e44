#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "degen/ring.hpp"

namespace degen {

/// Dense univariate polynomial over a commutative ring R.
///
/// Coefficients are stored from degree 0 upward and kept canonical: there is
/// never a trailing zero, so the zero polynomial is the empty list and two
/// polynomials are equal exactly when their coefficient lists are.
template <CommutativeRing R>
class Poly {
 public:
  using coefficient_type = R;
  using traits = ring_traits<R>;

  Poly() = default;

  // Constant embedding of the coefficient ring.
  Poly(R constant) {  // NOLINT(google-explicit-constructor)
    if (!traits::is_zero(constant)) coeffs_.push_back(std::move(constant));
  }

  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  /// The indeterminate itself.
  static Poly variable() { return monomial(traits::one(), 1); }

  static Poly monomial(R c, std::size_t degree) {
    if (traits::is_zero(c)) return {};
    std::vector<R> v(degree + 1, traits::zero());
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }

  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of the given degree; zero beyond the stored range.
  [[nodiscard]] R operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : traits::zero(); }

  [[nodiscard]] const std::vector<R>& coefficients() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] R leading() const { return coeffs_.empty() ? traits::zero() : coeffs_.back(); }

  /// Horner evaluation.
  [[nodiscard]] R eval(const R& v) const {
    R acc = traits::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  /// Substitution p(q), by Horner over Poly<R>.
  [[nodiscard]] Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
  }

  /// Applies f to every coefficient. The result is re-canonicalized, so f may
  /// send nonzero coefficients to zero (e.g. evaluating at a root).
  template <typename F>
  [[nodiscard]] auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const R& c : coeffs_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (R& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const R& s) {
    if (traits::is_zero(s)) return {};
    std::vector<R> out;
    out.reserve(a.coeffs_.size());
    for (const R& c : a.coeffs_) out.push_back(c * s);
    return Poly(std::move(out));
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <CommutativeRing R>
Poly<R> pow(const Poly<R>& base, unsigned exponent) {
  Poly<R> result(ring_traits<R>::one());
  Poly<R> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

// Only nonzero constants with a unit value are units of R[x].
template <CommutativeRing R>
struct ring_traits<Poly<R>> {
  static Poly<R> zero() { return {}; }
  static Poly<R> one() { return Poly<R>(ring_traits<R>::one()); }
  static Poly<R> from_int(std::int64_t v) { return Poly<R>(ring_traits<R>::from_int(v)); }
  static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
  static bool is_unit(const Poly<R>& p) { return p.size() == 1 && ring_traits<R>::is_unit(p[0]); }
  static Poly<R> inverse(const Poly<R>& p) {
    if (!is_unit(p)) throw NonUnitConstantTerm("polynomial is not a unit");
    return Poly<R>(ring_traits<R>::inverse(p[0]));
  }
};

}  // namespace degen
