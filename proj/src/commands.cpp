#include "darboux/commands.hpp"

#include "darboux/bounds.hpp"
#include "darboux/catalog.hpp"
#include "darboux/integrability.hpp"
#include "darboux/invariant.hpp"
#include "darboux/system_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace darboux {

namespace {

using Json = nlohmann::ordered_json;

/// Computation could not be certified; exit code 3.
class CommandFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<MultiPoly> parse_list(const LoadedSystem& s, const std::string& text) {
  std::vector<MultiPoly> out;
  for (const auto& item : split(text, ',')) out.push_back(s.parse_set(item));
  return out;
}

Json strings(const std::vector<MultiPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json bound_json(const BoundReport& b) {
  Json j;
  j["formula"] = b.formula;
  j["value"] = b.value ? Json(*b.value) : Json(nullptr);
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string("none");
    return v.dump();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, out, indent + 1);
    } else if (v.is_array()) {
      out << pad << it.key() << ":" << (v.empty() ? " none" : "") << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render(e, out, indent + 2);
        } else {
          out << pad << "  - " << scalar(e) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

struct Options {
  bool json = false;
  std::string instantiate;
  std::string system;
  std::string f;
  std::string basis;
  std::string candidates;
  std::string planes;
  std::string exps;
  std::optional<int> degree;
  bool ambient = false;
  bool sigma = false;
  std::size_t n = 0;
  std::string m;
  unsigned m1 = 0;
  std::string context = "ambient";
  std::optional<unsigned long long> p;
  std::optional<unsigned long long> q;
  bool meridians = false;
  bool parallels = false;
  bool through_point = false;
  std::vector<std::string> names;
};

LoadedSystem load(const Options& o) {
  LoadedSystem s = load_system(o.system);
  if (!o.instantiate.empty()) s = s.instantiated(parse_bindings(o.instantiate, s.context.parameters));
  return s;
}

Json header(const std::string& command, const LoadedSystem& s) {
  Json j;
  j["command"] = command;
  j["system"] = s.spec.name.empty() ? "unnamed" : s.spec.name;
  return j;
}

std::vector<MultiPoly> default_basis(const LoadedSystem& s) {
  std::vector<MultiPoly> basis;
  const auto& c = s.context.coordinates;
  const std::size_t n = c.size() - (s.ellipsoid ? 1 : 0);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(MultiPoly::variable(c, c[i]));
  return basis;
}

const Ellipsoid& need_ellipsoid(const LoadedSystem& s) {
  if (!s.ellipsoid) throw SystemError("system " + s.spec.name + " has no ellipsoid");
  return *s.ellipsoid;
}

Json cmd_check_surface(const Options& o) {
  LoadedSystem s = load(o);
  const Ellipsoid& e = need_ellipsoid(s);
  OnSurfaceCertificate cert = on_surface_check(s.field, e);
  Json j = header("check-surface", s);
  j["ellipsoid"] = e.defining_polynomial().to_string();
  j["on_surface"] = cert.on_surface();
  j["multiplier"] = cert.multiplier->to_string();
  j["assumptions"] = e.assumptions();
  return j;
}

Json hypersurface_json(const InvariantHypersurface& h) {
  Json j;
  j["f"] = h.f.to_string();
  j["cofactor"] = h.cofactor.k.to_string();
  j["cofactor_on_surface"] = h.cofactor.on_surface;
  j["transversality"] = to_string(h.transversality);
  if (h.tangency) j["tangency"] = to_string(*h.tangency);
  if (h.multiplicity) j["multiplicity"] = *h.multiplicity;
  return j;
}

Json cmd_cofactor(const Options& o) {
  LoadedSystem s = load(o);
  const MultiPoly f = s.parse_set(o.f);
  const Ellipsoid* surface = (s.ellipsoid && !o.ambient) ? &*s.ellipsoid : nullptr;
  Json j = header("cofactor", s);
  const InvarianceCheck c = invariance_check(s.field, f, surface, o.degree);
  j["f"] = f.to_string();
  j["invariant"] = c.accepted();
  if (c.certificate) {
    Json h = hypersurface_json(*c.certificate);
    h.erase("f");
    j.update(h);
  }
  if (!c.rejection.empty()) j["rejection"] = c.rejection;
  return j;
}

Json cmd_extactic(const Options& o) {
  LoadedSystem s = load(o);
  const std::vector<MultiPoly> basis = o.basis.empty() ? default_basis(s) : parse_list(s, o.basis);
  ExtacticReport r = extactic(s.field, basis, parse_list(s, o.candidates));
  Json j = header("extactic", s);
  j["basis"] = strings(r.basis);
  j["extactic"] = r.ew.to_string();
  j["degenerate"] = r.degenerate;
  Json factors = Json::array();
  for (const auto& ff : r.factors_found) factors.push_back({{"factor", ff.form.to_string()}, {"multiplicity", ff.multiplicity}});
  j["factors"] = factors;
  j["residual"] = r.residual.to_string();
  if (s.ellipsoid) j["normal_form"] = normal_form(r.ew, *s.ellipsoid).to_string();
  return j;
}

Json cmd_planes(const Options& o, bool meridians) {
  LoadedSystem s = load(o);
  const Ellipsoid& e = need_ellipsoid(s);
  const std::vector<MultiPoly> cands = parse_list(s, o.candidates);
  PlaneSearch ps = meridians ? find_meridians(s.field, e, cands) : find_parallels(s.field, e, cands);
  const auto real = real_planes(ps);
  Json j = header(meridians ? "meridians" : "parallels", s);
  j["extactic"] = ps.extactic.ew.to_string();
  j["normal_form"] = ps.reduced.to_string();
  j["degenerate"] = ps.degenerate;
  j["searched"] = ps.searched;
  if (!ps.note.empty()) j["note"] = ps.note;
  Json found = Json::array();
  for (const auto& h : ps.found) {
    Json hj = hypersurface_json(h);
    hj["real"] = std::any_of(real.begin(), real.end(), [&](const InvariantHypersurface& r) { return r.f == h.f; });
    found.push_back(hj);
  }
  j["found"] = found;
  j["count"] = ps.found.size();
  j["real_count"] = real.size();
  j["rejected"] = ps.rejected;
  Json unresolved = Json::array();
  for (const auto& u : ps.unresolved) unresolved.push_back(u.to_string());
  j["unresolved"] = unresolved;
  j["bound"] = bound_json(ps.bound);
  j["within_bound"] = ps.within_bound;
  return j;
}

Json cmd_multiplicity(const Options& o) {
  LoadedSystem s = load(o);
  const std::vector<MultiPoly> basis = o.basis.empty() ? default_basis(s) : parse_list(s, o.basis);
  const MultiPoly f = s.parse_set(o.f);
  ExtacticReport r = extactic(s.field, basis);
  Json j = header("multiplicity", s);
  j["f"] = f.to_string();
  j["extactic"] = r.ew.to_string();
  if (r.degenerate) throw CommandFailure("the extactic polynomial vanishes identically");
  j["multiplicity"] = !f.is_constant() && !divides(f, r.ew) ? 0U : multiplicity(f, r);
  return j;
}

Json cmd_darboux(const Options& o) {
  LoadedSystem s = load(o);
  const Ellipsoid* surface = s.ellipsoid ? &*s.ellipsoid : nullptr;
  const std::vector<MultiPoly> fs = parse_list(s, o.planes);
  std::vector<ExpPair> exps;
  for (const auto& item : split(o.exps, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw SystemError("exponential factor '" + item + "' is not of the form g:h");
    exps.push_back({s.parse_set(parts[0]), s.parse_set(parts[1])});
  }
  if (fs.empty() && exps.empty()) throw SystemError("darboux needs --planes or --exp");

  Json j = header("darboux", s);
  std::vector<MultiPoly> ks;
  Json factors = Json::array();
  for (const auto& f : fs) {
    auto c = cofactor_solve(s.field, f, nullptr, o.degree);
    if (!c && surface != nullptr) c = cofactor_solve(s.field, f, surface, o.degree);
    if (!c) throw CommandFailure("no cofactor for " + f.to_string());
    ks.push_back(c->k);
    factors.push_back({{"f", f.to_string()}, {"cofactor", c->k.to_string()}, {"cofactor_on_surface", c->on_surface}});
  }
  std::vector<MultiPoly> ls;
  Json exp_json = Json::array();
  for (const auto& [g, h] : exps) {
    ExpFactorCheck c = exp_factor_check(s.field, g, h, surface);
    if (!c.factor) throw CommandFailure("exp(" + g.to_string() + "/(" + h.to_string() + ")) is not an exponential factor: " + c.rejection);
    ls.push_back(c.factor->l);
    exp_json.push_back({{"g", g.to_string()},
                        {"h", h.to_string()},
                        {"cofactor", c.factor->l.to_string()},
                        {"within_degree_bound", c.factor->within_degree_bound}});
  }
  j["factors"] = factors;
  if (!exps.empty()) j["exponential_factors"] = exp_json;

  Json relations = Json::array();
  for (const auto& rel : solve_relation(ks, ls, surface, o.sigma)) {
    Json r;
    Json lam = Json::array();
    for (const auto& l : rel.lambdas) lam.push_back(l.to_string());
    Json mu = Json::array();
    for (const auto& m : rel.mus) mu.push_back(m.to_string());
    r["lambdas"] = lam;
    if (!exps.empty()) r["mus"] = mu;
    r["sigma"] = rel.sigma.to_string();
    r["kind"] = rel.is_first_integral() ? "first integral" : "Darboux invariant";
    DarbouxFunction d = build_darboux_function(s.field, fs, exps, rel, surface);
    r["function"] = d.rendering;
    if (d.polynomial) {
      r["polynomial"] = d.polynomial->to_string();
    }
    if (d.polynomial && rel.is_first_integral()) {
      MultiPoly xd = lie_derivative(s.field, *d.polynomial);
      if (surface != nullptr) xd = normal_form(xd, *surface);
      r["lie_derivative"] = xd.to_string();
    }
    relations.push_back(r);
  }
  j["relations"] = relations;
  return j;
}

std::vector<int> parse_degrees(const std::string& text, bool allow_minus_infinity, DegreeVector* dv) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) {
    if (t == "-inf" && allow_minus_infinity) {
      dv->m.push_back(Degree::minus_infinity());
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0) throw SystemError("degree '" + t + "' is not a nonnegative integer");
    out.push_back(v);
    if (dv != nullptr) dv->m.push_back(Degree(v));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Json cmd_bounds(const Options& o) {
  if (o.meridians && o.parallels) throw SystemError("choose one of --meridians and --parallels");
  Json j;
  j["command"] = "bounds";
  BoundReport b;
  if (o.parallels) {
    DegreeVector dv;
    parse_degrees(o.m, true, &dv);
    dv.sorted = dv.m;
    std::sort(dv.sorted.rbegin(), dv.sorted.rend());
    j["kind"] = "parallels";
    b = bound_parallels(dv);
  } else if (o.meridians) {
    j["kind"] = "meridians";
    b = bound_meridians(o.n, parse_degrees(o.m, false, nullptr));
  } else {
    j["kind"] = o.through_point ? "hyperplanes through a point" : "hyperplanes";
    b = bound_hyperplanes_Rn(o.n, parse_degrees(o.m, false, nullptr), o.through_point);
  }
  j["n"] = b.n;
  j["m"] = b.m;
  j.update(bound_json(b));
  return j;
}

Json cmd_thresholds(const Options& o) {
  ThresholdContext ctx;
  if (o.context == "ambient") ctx = ThresholdContext::Ambient;
  else if (o.context == "ellipsoid") ctx = ThresholdContext::Ellipsoid;
  else throw SystemError("context must be 'ambient' or 'ellipsoid'");
  const Thresholds t = integrability_thresholds(o.n, o.m1, ctx);
  Json j;
  j["command"] = "thresholds";
  j["context"] = o.context;
  j["n"] = t.n;
  j["m1"] = t.m1;
  j["darboux"] = t.darboux;
  j["rational"] = t.rational;
  if (t.dim_plus_one) {
    j["dim_plus_one"] = *t.dim_plus_one;
    j["agrees_with_dim"] = t.agrees_with_dim;
  }
  if (o.p || o.q) {
    const ThresholdVerdict v = check_threshold(o.p.value_or(0), o.q.value_or(0), t);
    j["p"] = o.p.value_or(0);
    j["q"] = o.q.value_or(0);
    j["relation_guaranteed"] = v.relation_guaranteed;
    j["rational_integral_guaranteed"] = v.rational_integral_guaranteed;
    j["verdict"] = v.text;
  }
  return j;
}

Json verification_json(const EntryVerification& v) {
  Json e;
  e["system"] = v.system;
  e["passed"] = v.passed();
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  e["checks"] = checks;
  e["flags"] = v.flags;
  return e;
}

}  // namespace

int run_command(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands{"check-surface", "cofactor", "extactic", "meridians",
                                                 "parallels",     "multiplicity", "darboux", "bounds",
                                                 "thresholds",    "catalog",  "verify-catalog"};
  std::vector<std::string> args = raw_args;
  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      std::find(commands.begin(), commands.end(), args.front()) == commands.end())
    args.insert(args.begin(), "darboux");

  Options o;
  CLI::App app("Darboux integrability of polynomial vector fields on ellipsoids", "darboux");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print one JSON document");
  app.add_option("--instantiate", o.instantiate, "Parameter bindings k=v,...");

  auto system_arg = [&](CLI::App* c) { c->add_option("system", o.system, "System file or catalog name")->required(); };
  auto basis_opt = [&](CLI::App* c) { c->add_option("--basis", o.basis, "Comma-separated basis polynomials"); };
  auto cand_opt = [&](CLI::App* c) { c->add_option("--candidates", o.candidates, "Comma-separated candidate planes"); };

  auto* check = app.add_subcommand("check-surface", "Certify that the field is tangent to the ellipsoid");
  system_arg(check);
  auto* cof = app.add_subcommand("cofactor", "Cofactor of an invariant hypersurface");
  system_arg(cof);
  cof->add_option("--f", o.f, "Polynomial f")->required();
  cof->add_option("--degree", o.degree, "Cofactor degree bound");
  cof->add_flag("--ambient", o.ambient, "Do not fall back to the surface");
  auto* ext = app.add_subcommand("extactic", "Extactic polynomial of a basis");
  system_arg(ext);
  basis_opt(ext);
  cand_opt(ext);
  auto* mer = app.add_subcommand("meridians", "Invariant meridians");
  system_arg(mer);
  cand_opt(mer);
  auto* par = app.add_subcommand("parallels", "Invariant parallels");
  system_arg(par);
  cand_opt(par);
  auto* mult = app.add_subcommand("multiplicity", "Multiplicity of a factor of the extactic polynomial");
  system_arg(mult);
  mult->add_option("--f", o.f, "Polynomial f")->required();
  basis_opt(mult);
  auto* dar = app.add_subcommand("darboux", "Darboux relations and functions");
  system_arg(dar);
  dar->add_option("--planes", o.planes, "Comma-separated invariant polynomials");
  dar->add_option("--exp", o.exps, "Exponential factors g:h,...");
  dar->add_option("--degree", o.degree, "Cofactor degree bound");
  dar->add_flag("--sigma", o.sigma, "Allow a time-dependent factor");
  auto* bnd = app.add_subcommand("bounds", "Counting bounds");
  bnd->add_option("--n", o.n, "Dimension")->required();
  bnd->add_option("--m", o.m, "Degrees, comma-separated")->required();
  bnd->add_flag("--meridians", o.meridians, "Meridians on the ellipsoid");
  bnd->add_flag("--parallels", o.parallels, "Parallels on the ellipsoid");
  bnd->add_flag("--through-point", o.through_point, "Hyperplanes through a common point");
  auto* thr = app.add_subcommand("thresholds", "Integrability thresholds");
  thr->add_option("--n", o.n, "Dimension")->required();
  thr->add_option("--m1", o.m1, "Largest degree")->required();
  thr->add_option("--context", o.context, "ambient or ellipsoid");
  thr->add_option("--p", o.p, "Number of invariant hypersurfaces");
  thr->add_option("--q", o.q, "Number of exponential factors");
  auto* cat = app.add_subcommand("catalog", "List catalog systems or print one");
  cat->add_option("name", o.system, "Catalog name");
  auto* ver = app.add_subcommand("verify-catalog", "Recompute every catalog expectation");
  ver->add_option("names", o.names, "Catalog names (default: all)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  int code = kSuccess;
  try {
    Json j;
    if (check->parsed()) {
      j = cmd_check_surface(o);
    } else if (cof->parsed()) {
      j = cmd_cofactor(o);
    } else if (ext->parsed()) {
      j = cmd_extactic(o);
    } else if (mer->parsed()) {
      j = cmd_planes(o, true);
    } else if (par->parsed()) {
      j = cmd_planes(o, false);
    } else if (mult->parsed()) {
      j = cmd_multiplicity(o);
    } else if (dar->parsed()) {
      j = cmd_darboux(o);
    } else if (bnd->parsed()) {
      j = cmd_bounds(o);
    } else if (thr->parsed()) {
      j = cmd_thresholds(o);
    } else if (cat->parsed()) {
      j["command"] = "catalog";
      if (o.system.empty()) {
        Json list = Json::array();
        for (const auto& e : catalog_entries())
          list.push_back({{"name", e.name}, {"description", parse_system_text(e.text).description}});
        j["systems"] = list;
      } else {
        auto text = catalog_text(o.system);
        if (!text) throw SystemError("no catalog entry named " + o.system);
        if (!o.json) {
          out << *text;
          return kSuccess;
        }
        j["name"] = o.system;
        j["text"] = *text;
      }
    } else if (ver->parsed()) {
      j["command"] = "verify-catalog";
      Json entries = Json::array();
      std::size_t passed = 0;
      std::size_t flagged = 0;
      std::vector<CatalogEntry> selected;
      for (auto& e : catalog_entries()) {
        if (o.names.empty() || std::find(o.names.begin(), o.names.end(), e.name) != o.names.end())
          selected.push_back(std::move(e));
      }
      for (const auto& name : o.names) {
        if (std::none_of(selected.begin(), selected.end(), [&](const CatalogEntry& e) { return e.name == name; }))
          throw SystemError("no catalog entry named " + name);
      }
      for (const auto& e : selected) {
        EntryVerification v;
        try {
          v = verify_entry(load_spec(parse_system_text(e.text)));
        } catch (const std::exception& ex) {
          v.system = e.name;
          v.checks.push_back({"load", false, ex.what()});
        }
        passed += v.passed() ? 1 : 0;
        flagged += v.flags.empty() ? 0 : 1;
        entries.push_back(verification_json(v));
      }
      j["entries"] = entries;
      j["total"] = selected.size();
      j["passed"] = passed;
      j["flagged"] = flagged;
      if (passed != selected.size()) code = kVerificationFailure;
    }
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      render(j, out, 0);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const SystemError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const CommandFailure& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return code;
}

}  // namespace darboux
