#pragma once

#include "darboux/multipoly.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position;
};

struct ParseContext {
  Coordinates coordinates;
  std::set<std::string, std::less<>> parameters;
};

/// Parses integers, I, identifiers, + - * / ^ and parentheses. Divisors must be
/// free of coordinates; exponents are nonnegative integer literals.
MultiPoly parse_expression(std::string_view src, const ParseContext& ctx);
/// Parses a coordinate-free expression.
CoeffValue parse_coefficient(std::string_view src, const std::set<std::string, std::less<>>& parameters);

}  // namespace darboux
