#include "darboux/system_file.hpp"

#include "darboux/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace darboux {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    std::string t = trim(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::pair<std::string, std::string> split_key(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw SystemError("line " + std::to_string(l.number) + ": expected 'key = value'");
  return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

std::pair<std::string, std::string> split_pair(const std::string& v, std::size_t line) {
  const auto bar = v.find('|');
  if (bar == std::string::npos) throw SystemError("line " + std::to_string(line) + ": expected 'expression | value'");
  return {trim(std::string_view(v).substr(0, bar)), trim(std::string_view(v).substr(bar + 1))};
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

}  // namespace

SystemSpec parse_system_text(const std::string& text) {
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw SystemError("line " + std::to_string(number) + ": malformed section header");
      current = t.substr(1, t.size() - 2);
      static const std::set<std::string> known{"system", "coordinates", "parameters", "ellipsoid", "field", "expect"};
      if (known.count(current) == 0) throw SystemError("line " + std::to_string(number) + ": unknown section [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) throw SystemError("line " + std::to_string(number) + ": content before the first section");
    auto& lines = sections[current];
    if ((raw.front() == ' ' || raw.front() == '\t') && !lines.empty()) {
      lines.back().text += " " + t;
    } else {
      lines.push_back({number, t});
    }
  }

  SystemSpec spec;
  for (const auto& l : sections["system"]) {
    auto [k, v] = split_key(l);
    if (k == "name") {
      spec.name = v;
    } else if (k == "description") {
      spec.description = v;
    } else if (k == "note") {
      spec.notes.push_back(v);
    } else {
      throw SystemError("line " + std::to_string(l.number) + ": unknown key '" + k + "' in [system]");
    }
  }
  for (const auto& l : sections["coordinates"]) {
    for (auto& c : split_list(l.text)) spec.coordinates.push_back(std::move(c));
  }
  for (const auto& l : sections["parameters"]) {
    if (l.text.find('=') != std::string::npos) {
      spec.settings.push_back(split_key(l));
    } else {
      for (auto& p : split_list(l.text)) spec.parameters.push_back(std::move(p));
    }
  }
  for (const auto& l : sections["ellipsoid"]) {
    for (auto& a : split_list(l.text)) spec.semi_axes.push_back(std::move(a));
  }
  std::map<std::string, std::string> comps;
  for (const auto& l : sections["field"]) {
    auto [k, v] = split_key(l);
    if (k.size() < 2 || k.back() != '\'')
      throw SystemError("line " + std::to_string(l.number) + ": field lines read \"x' = expression\"");
    const std::string var = trim(std::string_view(k).substr(0, k.size() - 1));
    if (!comps.emplace(var, v).second) throw SystemError("line " + std::to_string(l.number) + ": duplicate component " + var);
  }
  for (const auto& l : sections["expect"]) {
    auto [k, v] = split_key(l);
    Expectations& e = spec.expect;
    if (k == "on_surface") {
      e.on_surface = v;
    } else if (k == "extactic_basis") {
      e.extactic_basis = split_list(v);
    } else if (k == "extactic") {
      e.extactic = v;
    } else if (k == "extactic_printed") {
      e.extactic_printed = v;
    } else if (k == "plane") {
      e.planes.push_back(v);
    } else if (k == "plane_printed") {
      e.planes_printed.push_back(v);
    } else if (k == "cofactor") {
      e.cofactors.push_back(split_pair(v, l.number));
    } else if (k == "cofactor_printed") {
      e.cofactors_printed.push_back(split_pair(v, l.number));
    } else if (k == "multiplicity") {
      auto [f, m] = split_pair(v, l.number);
      unsigned long mult = 0;
      try {
        mult = std::stoul(m);
      } catch (const std::exception&) {
        throw SystemError("line " + std::to_string(l.number) + ": multiplicity must be a positive integer");
      }
      e.multiplicities.emplace_back(f, static_cast<unsigned>(mult));
    } else if (k == "parallel") {
      e.parallels.push_back(v);
    } else {
      throw SystemError("line " + std::to_string(l.number) + ": unknown key '" + k + "' in [expect]");
    }
  }

  if (spec.coordinates.empty()) throw SystemError("no coordinates declared");
  for (const auto& c : spec.coordinates) {
    auto it = comps.find(c);
    if (it == comps.end()) throw SystemError("missing field component " + c + "'");
    spec.components.push_back(it->second);
    comps.erase(it);
  }
  if (!comps.empty()) throw SystemError("field component for undeclared coordinate " + comps.begin()->first);
  return spec;
}

std::string print_system(const SystemSpec& spec) {
  std::ostringstream out;
  out << "[system]\n";
  if (!spec.name.empty()) out << "name = " << spec.name << "\n";
  if (!spec.description.empty()) out << "description = " << spec.description << "\n";
  for (const auto& n : spec.notes) out << "note = " << n << "\n";
  out << "\n[coordinates]\n" << join(spec.coordinates) << "\n";
  if (!spec.parameters.empty() || !spec.settings.empty()) {
    out << "\n[parameters]\n";
    if (!spec.parameters.empty()) out << join(spec.parameters) << "\n";
    for (const auto& [k, v] : spec.settings) out << k << " = " << v << "\n";
  }
  if (!spec.semi_axes.empty()) out << "\n[ellipsoid]\n" << join(spec.semi_axes) << "\n";
  out << "\n[field]\n";
  for (std::size_t i = 0; i < spec.coordinates.size(); ++i)
    out << spec.coordinates[i] << "' = " << spec.components[i] << "\n";
  const Expectations& e = spec.expect;
  std::ostringstream ex;
  if (e.on_surface) ex << "on_surface = " << *e.on_surface << "\n";
  if (!e.extactic_basis.empty()) ex << "extactic_basis = " << join(e.extactic_basis) << "\n";
  if (e.extactic) ex << "extactic = " << *e.extactic << "\n";
  if (e.extactic_printed) ex << "extactic_printed = " << *e.extactic_printed << "\n";
  for (const auto& p : e.planes) ex << "plane = " << p << "\n";
  for (const auto& p : e.planes_printed) ex << "plane_printed = " << p << "\n";
  for (const auto& [f, k] : e.cofactors) ex << "cofactor = " << f << " | " << k << "\n";
  for (const auto& [f, k] : e.cofactors_printed) ex << "cofactor_printed = " << f << " | " << k << "\n";
  for (const auto& [f, m] : e.multiplicities) ex << "multiplicity = " << f << " | " << m << "\n";
  for (const auto& p : e.parallels) ex << "parallel = " << p << "\n";
  if (!ex.str().empty()) out << "\n[expect]\n" << ex.str();
  return out.str();
}

MultiPoly LoadedSystem::parse(const std::string& expr) const { return parse_expression(expr, context); }

MultiPoly LoadedSystem::parse_set(const std::string& expr) const { return parse(expr).instantiate(settings); }

LoadedSystem LoadedSystem::instantiated(const ParamBindings& bindings) const {
  LoadedSystem out = *this;
  for (const auto& [k, v] : bindings) {
    if (context.parameters.count(k) == 0) throw SystemError("unknown parameter '" + k + "' in instantiation");
  }
  ParamBindings combined;
  for (const auto& [k, v] : settings) combined[k] = v.substitute(bindings);
  for (const auto& [k, v] : bindings) combined.emplace(k, v);
  out.settings = std::move(combined);
  out.field = field.instantiate(bindings);
  if (ellipsoid) out.ellipsoid = ellipsoid->instantiate(bindings);
  return out;
}

ParamBindings parse_bindings(const std::string& text, const std::set<std::string, std::less<>>& parameters) {
  ParamBindings out;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SystemError("binding '" + item + "' is not of the form name=value");
    const std::string k = trim(std::string_view(item).substr(0, eq));
    if (parameters.count(k) == 0) throw SystemError("unknown parameter '" + k + "'");
    out[k] = parse_coefficient(trim(std::string_view(item).substr(eq + 1)), parameters);
  }
  return out;
}

LoadedSystem load_spec(const SystemSpec& spec) {
  ParseContext ctx{Coordinates(spec.coordinates), {}};
  for (const auto& p : spec.parameters) {
    if (ctx.coordinates.contains(p)) throw SystemError("'" + p + "' is both a coordinate and a parameter");
    if (p == "I") throw SystemError("'I' is reserved for the imaginary unit");
    ctx.parameters.insert(p);
  }
  ParamBindings settings;
  for (const auto& [k, v] : spec.settings) {
    if (ctx.parameters.count(k) == 0) throw SystemError("setting for undeclared parameter '" + k + "'");
    settings[k] = parse_coefficient(v, ctx.parameters);
  }
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    try {
      comps.push_back(parse_expression(spec.components[i], ctx).instantiate(settings));
    } catch (const ParseError& e) {
      throw SystemError("component " + spec.coordinates[i] + "': " + e.what());
    }
  }
  LoadedSystem s{spec, ctx, settings, VectorField(ctx.coordinates, std::move(comps)), std::nullopt};
  if (!spec.semi_axes.empty()) {
    std::vector<CoeffValue> axes;
    for (const auto& a : spec.semi_axes) axes.push_back(parse_coefficient(a, ctx.parameters).substitute(settings));
    s.ellipsoid.emplace(ctx.coordinates, std::move(axes));
    OnSurfaceCertificate cert = on_surface_check(s.field, *s.ellipsoid);
    if (!cert.on_surface())
      throw SystemError("field is not tangent to the ellipsoid; normal form of X(M) = " + cert.residual->to_string());
  }
  return s;
}

LoadedSystem load_system(const std::string& path_or_name) {
  std::ifstream file(path_or_name);
  if (file) {
    std::stringstream buf;
    buf << file.rdbuf();
    return load_spec(parse_system_text(buf.str()));
  }
  auto text = catalog_text(path_or_name);
  if (!text) throw SystemError("no such file or catalog entry: " + path_or_name);
  return load_spec(parse_system_text(*text));
}

}  // namespace darboux
