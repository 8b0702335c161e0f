#pragma once

#include "darboux/multipoly.hpp"
#include "darboux/parser.hpp"
#include "darboux/system_file.hpp"

#include <string>
#include <vector>

namespace support {

using namespace darboux;

/// Parser bound to a fixed set of coordinates and parameters.
struct Ring {
  ParseContext ctx;

  Ring(std::vector<std::string> coords, std::set<std::string, std::less<>> params = {})
      : ctx{Coordinates(std::move(coords)), std::move(params)} {}

  MultiPoly operator()(std::string_view src) const { return parse_expression(src, ctx); }
  CoeffValue c(std::string_view src) const { return parse_coefficient(src, ctx.parameters); }
  MultiPoly var(std::string_view name) const { return MultiPoly::variable(ctx.coordinates, name); }
  MultiPoly constant(const CoeffValue& v) const { return MultiPoly::constant(ctx.coordinates, v); }
};

/// x, y, z with the parameter names used by the worked systems.
inline Ring xyz() {
  return Ring({"x", "y", "z"}, {"a", "b", "c", "k2", "k4", "k001", "k010", "k100", "a020", "a011", "a101", "b002",
                               "b011", "alpha", "beta"});
}

inline ParamBindings bindings(const Ring& r, const std::string& text) {
  return parse_bindings(text, r.ctx.parameters);
}

}  // namespace support
