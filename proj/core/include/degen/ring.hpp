#pragma once

#include <concepts>
#include <cstdint>

#include "degen/errors.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Coefficient-ring contract used by Poly and Series. Specialize for each
/// ring: zero, one, from_int, is_zero, is_unit, inverse (throws when the
/// argument is not a unit).
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational{}; }
  static Rational one() { return Rational{1}; }
  static Rational from_int(std::int64_t v) { return Rational{v}; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static bool is_unit(const Rational& r) { return !r.is_zero(); }
  static Rational inverse(const Rational& r) {
    if (r.is_zero()) throw NonUnitConstantTerm("zero is not a unit");
    return r.inverse();
  }
};

template <typename R>
concept CommutativeRing = std::regular<R> && requires(const R& a, const R& b, std::int64_t i) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::from_int(i) } -> std::same_as<R>;
  { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
  { ring_traits<R>::is_unit(a) } -> std::same_as<bool>;
  { ring_traits<R>::inverse(a) } -> std::same_as<R>;
};

}  // namespace degen
