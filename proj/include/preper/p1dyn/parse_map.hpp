#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "preper/p1dyn/map.hpp"

namespace preper {

/// Thrown for well-formed expressions that are not degree-2 maps.
class MapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rational function in z, e.g. "(2*z^2 - z - 1)/(2*z^2)". Common factors of
/// numerator and denominator cancel. Throws ParseError on syntax errors and
/// MapError when the reduced map has degree other than 2.
QuadRatMap parse_map(std::string_view text);

}  // namespace preper
