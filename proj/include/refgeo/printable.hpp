#pragma once

#include <concepts>
#include <ostream>
#include <string>

namespace refgeo {

template <class T>
  requires requires(const T& t) {
    { t.str() } -> std::convertible_to<std::string>;
  }
std::ostream& operator<<(std::ostream& os, const T& value) {
  return os << value.str();
}

}  // namespace refgeo
