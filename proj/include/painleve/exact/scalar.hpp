#pragma once

#include <concepts>

#include "painleve/exact/rational.hpp"

namespace painleve::exact {

/// Commutative ring containing Q: the coefficient domain of binary forms.
template <class F>
concept Scalar = std::regular<F> && requires(const F a, const F b, const Rational r) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a * r } -> std::convertible_to<F>;
  { F(r) };
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// is_zero found by argument-dependent lookup at instantiation, usable from
/// scopes where a member named is_zero would hide the free function.
template <class F>
bool is_zero_value(const F& a) {
  return is_zero(a);
}

template <class F>
concept Field = Scalar<F> && requires(const F a, const F b) {
  { a / b } -> std::convertible_to<F>;
};

}  // namespace painleve::exact
