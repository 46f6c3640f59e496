#pragma once

#include <concepts>
#include <string>

#include "refgeo/rational.hpp"
#include "refgeo/scalar.hpp"

namespace refgeo {

/// An exact ordered field: the arithmetic every geometric template relies on.
template <class F>
concept OrderedField = std::regular<F> && requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { sign(a) } -> std::convertible_to<int>;
  { to_double(a) } -> std::convertible_to<double>;
  { to_string(a) } -> std::convertible_to<std::string>;
  F(0);
};

template <OrderedField F>
F abs_value(const F& x) {
  return sign(x) < 0 ? -x : x;
}

template <OrderedField F>
bool is_zero(const F& x) {
  return sign(x) == 0;
}

}  // namespace refgeo
