#include "darboux/catalog.hpp"

#include "darboux/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

namespace darboux {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_catalog();
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  if (const char* dir = std::getenv("DARBOUX_CATALOG_DIR"); dir != nullptr && *dir != '\0') {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw SystemError(std::string("DARBOUX_CATALOG_DIR is not a directory: ") + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".sys") continue;
      std::ifstream in(entry.path());
      std::stringstream buf;
      buf << in.rdbuf();
      out.push_back({entry.path().stem().string(), buf.str()});
    }
  } else {
    for (const auto& [name, text] : detail::embedded_catalog()) out.push_back({std::string(name), std::string(text)});
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

std::optional<std::string> catalog_text(const std::string& name) {
  for (auto& e : catalog_entries())
    if (e.name == name) return std::move(e.text);
  return std::nullopt;
}

bool EntryVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

bool in_span(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  // Linear forms only: every term of f is a term of some basis monomial.
  for (const auto& [e, c] : f.terms()) {
    const bool found = std::any_of(basis.begin(), basis.end(), [&](const MultiPoly& b) {
      return b.terms().size() == 1 && b.terms().begin()->first == e;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace

EntryVerification verify_entry(const LoadedSystem& s) {
  EntryVerification v;
  v.system = s.spec.name;
  const Expectations& ex = s.spec.expect;
  const Ellipsoid* surface = s.ellipsoid ? &*s.ellipsoid : nullptr;
  auto run = [&](const std::string& name, auto&& body) {
    CheckResult r{name, false, ""};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    v.checks.push_back(std::move(r));
  };

  if (surface != nullptr) {
    run("on_surface", [&](CheckResult& r) {
      OnSurfaceCertificate cert = on_surface_check(s.field, *surface);
      if (!cert.on_surface()) {
        r.detail = "residual " + cert.residual->to_string();
        return;
      }
      r.detail = "multiplier " + cert.multiplier->to_string();
      r.passed = !ex.on_surface || *cert.multiplier == s.parse_set(*ex.on_surface);
      if (!r.passed) r.detail += ", expected " + s.parse_set(*ex.on_surface).to_string();
    });
  }

  std::vector<MultiPoly> basis;
  if (ex.extactic_basis.empty()) {
    const std::size_t n = s.context.coordinates.size() - (surface != nullptr ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(MultiPoly::variable(s.context.coordinates, s.context.coordinates[i]));
  } else {
    for (const auto& b : ex.extactic_basis) basis.push_back(s.parse_set(b));
  }
  std::optional<MultiPoly> ew;
  const bool need_extactic = ex.extactic || ex.extactic_printed || !ex.planes.empty() || !ex.multiplicities.empty();
  if (need_extactic) {
    run("extactic", [&](CheckResult& r) {
      ew = extactic(s.field, basis).ew;
      r.detail = ew->to_string();
      if (!ex.extactic) {
        r.passed = true;
        return;
      }
      auto ratio = constant_ratio(s.parse_set(*ex.extactic), *ew);
      r.passed = ratio.has_value();
      if (ratio) r.detail = "expected = (" + ratio->to_string() + ") * recomputed";
      else r.detail = "recomputed " + ew->to_string();
    });
  }
  if (ex.extactic_printed && ew) {
    if (!constant_ratio(s.parse_set(*ex.extactic_printed), *ew))
      v.flags.push_back("printed extactic " + *ex.extactic_printed + " differs from the recomputed " + ew->to_string());
  }

  for (const auto& p : ex.planes) {
    run("plane " + p, [&](CheckResult& r) {
      const MultiPoly f = s.parse_set(p);
      InvarianceCheck c = invariance_check(s.field, f, surface);
      if (!c.accepted()) {
        r.detail = c.rejection;
        return;
      }
      r.detail = "cofactor " + c.certificate->cofactor.k.to_string();
      if (c.certificate->tangency) r.detail += ", " + to_string(*c.certificate->tangency);
      r.passed = true;
      if (ew && in_span(f, basis)) {
        const bool div = !ew->is_zero() && divides(f, *ew);
        r.passed = div;
        r.detail += div ? ", divides the extactic polynomial" : ", does not divide the extactic polynomial";
      }
    });
  }
  for (const auto& p : ex.planes_printed) {
    const MultiPoly f = s.parse_set(p);
    if (!invariance_check(s.field, f, surface).accepted()) v.flags.push_back("printed plane " + p + " is not invariant");
  }

  for (const auto& [fs, ks] : ex.cofactors) {
    run("cofactor " + fs, [&](CheckResult& r) {
      const MultiPoly f = s.parse_set(fs);
      const MultiPoly k = s.parse_set(ks);
      auto amb = cofactor_solve(s.field, f, nullptr);
      if (amb) {
        r.detail = amb->k.to_string();
        r.passed = amb->k == k;
        return;
      }
      if (surface == nullptr) {
        r.detail = "no cofactor";
        return;
      }
      auto on = cofactor_solve(s.field, f, surface);
      if (!on) {
        r.detail = "no cofactor";
        return;
      }
      r.detail = on->k.to_string() + " (on the surface)";
      r.passed = equal_on_surface(on->k, k, *surface);
    });
  }
  for (const auto& [fs, ks] : ex.cofactors_printed) {
    const MultiPoly f = s.parse_set(fs);
    const MultiPoly k = s.parse_set(ks);
    MultiPoly res = lie_derivative(s.field, f) - k * f;
    if (surface != nullptr) res = normal_form(res, *surface);
    if (!res.is_zero()) v.flags.push_back("printed cofactor " + ks + " of " + fs + " fails X(f) = k f");
  }

  for (const auto& [fs, m] : ex.multiplicities) {
    run("multiplicity " + fs, [&](CheckResult& r) {
      if (!ew) throw std::logic_error("no extactic polynomial");
      const unsigned k = multiplicity(s.parse_set(fs), *ew);
      r.detail = std::to_string(k);
      r.passed = k == m;
    });
  }

  for (const auto& p : ex.parallels) {
    run("parallel " + p, [&](CheckResult& r) {
      if (surface == nullptr) throw std::logic_error("parallels need an ellipsoid");
      const MultiPoly f = normalize_linear_form(s.parse_set(p));
      PlaneSearch ps = find_parallels(s.field, *surface, {f});
      r.passed = std::any_of(ps.found.begin(), ps.found.end(), [&](const InvariantHypersurface& h) { return h.f == f; });
      r.detail = r.passed ? "invariant" : "not found";
    });
  }
  return v;
}

}  // namespace darboux
