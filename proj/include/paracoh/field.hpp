#pragma once

#include <concepts>

#include "paracoh/polynomial.hpp"
#include "paracoh/rational.hpp"

namespace paracoh {

/// The exact fields the engine runs over: Q and Q(t). Every linear-algebra
/// routine downstream is generic over this concept.
template <class F>
concept Field = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
  { F::from_rational(Rational()) } -> std::convertible_to<F>;
};

static_assert(Field<Rational>);
static_assert(Field<RationalFunction>);

template <Field F>
F field_str_helper();  // no definition; str() exists on both concrete fields

}  // namespace paracoh
