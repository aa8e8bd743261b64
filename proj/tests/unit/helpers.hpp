#pragma once

#include <string>

#include "lctk/json_io.hpp"
#include "lctk/polynomial.hpp"
#include "lctk/rational.hpp"

namespace lctk::test {

inline Polynomial P(const std::string& text) { return parse_polynomial_text(text); }
inline Rational Q(const std::string& text) { return Rational::parse(text); }

inline ProductForm product(std::initializer_list<std::pair<const char*, std::uint64_t>> factors) {
  ProductForm h;
  for (const auto& [text, mult] : factors) h.append(P(text), mult);
  return h;
}

}  // namespace lctk::test
