#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "preper/algebra/mpoly.hpp"

namespace preper {

/// Syntax or semantic error; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses integers, identifiers from `variables` (variable i becomes x_i),
/// + - * / ^ and parentheses. Exponents are integer literals, optionally
/// negative.
RatFunc parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// As parse_expression but requires a polynomial result.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace preper
