#pragma once

#include "darboux/ellipsoid.hpp"
#include "darboux/parser.hpp"
#include "darboux/vector_field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

/// Malformed or inconsistent system description.
class SystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Expectations {
  std::optional<std::string> on_surface;
  std::vector<std::string> extactic_basis;
  std::optional<std::string> extactic;
  std::optional<std::string> extactic_printed;
  std::vector<std::string> planes;
  std::vector<std::string> planes_printed;
  std::vector<std::pair<std::string, std::string>> cofactors;
  std::vector<std::pair<std::string, std::string>> cofactors_printed;
  std::vector<std::pair<std::string, unsigned>> multiplicities;
  std::vector<std::string> parallels;
  friend bool operator==(const Expectations&, const Expectations&) = default;
};

/// A system description as written in a .sys file; expressions are kept as text.
struct SystemSpec {
  std::string name;
  std::string description;
  std::vector<std::string> notes;
  std::vector<std::string> coordinates;
  std::vector<std::string> parameters;
  std::vector<std::pair<std::string, std::string>> settings;  // parameter = expression
  std::vector<std::string> semi_axes;
  std::vector<std::string> components;  // in coordinate order
  Expectations expect;
  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// Parses the line-oriented format with sections [system] [coordinates]
/// [parameters] [ellipsoid] [field] [expect]. Lines starting with '#' are
/// comments; an indented line continues the previous value.
SystemSpec parse_system_text(const std::string& text);
/// Canonical text of a spec; parse_system_text(print_system(s)) == s.
std::string print_system(const SystemSpec& spec);

/// A validated system: the field with its settings applied and the ellipsoid.
struct LoadedSystem {
  SystemSpec spec;
  ParseContext context;
  ParamBindings settings;
  VectorField field;
  std::optional<Ellipsoid> ellipsoid;

  MultiPoly parse(const std::string& expr) const;
  /// Parses and applies the system's settings.
  MultiPoly parse_set(const std::string& expr) const;
  /// Applies extra bindings to the field and ellipsoid.
  LoadedSystem instantiated(const ParamBindings& bindings) const;
};

/// Builds the field, applies settings and, when semi-axes are present, checks
/// that the field is tangent to the ellipsoid (throws SystemError carrying the
/// residual otherwise). Parse failures surface as ParseError or SystemError.
LoadedSystem load_spec(const SystemSpec& spec);
/// A readable file path, or else the name of a catalog entry.
LoadedSystem load_system(const std::string& path_or_name);

/// "k=v,k2=v2" with values parsed as coefficient expressions.
ParamBindings parse_bindings(const std::string& text, const std::set<std::string, std::less<>>& parameters);

}  // namespace darboux
