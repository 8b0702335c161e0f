#include "darboux/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace darboux {

namespace {

unsigned exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool monomial_divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

std::string monomial_string(const Coordinates& coords, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += coords[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string single_term_factor(const ParamPoly::Term& t) {
  std::string out;
  if (t.coeff == GaussQ(-1)) {
    out = "-";
  } else if (!t.coeff.is_one()) {
    out = t.coeff.to_string();
  }
  if (!t.mono.empty()) {
    if (!out.empty() && out != "-") out += "*";
    out += mono_to_string(t.mono);
  }
  return out;
}

std::string term_string(const Coordinates& coords, const Exponents& e, const CoeffValue& c) {
  const std::string mono = monomial_string(coords, e);
  if (mono.empty()) return c.prints_as_single_factor() ? c.to_string() : "(" + c.to_string() + ")";
  std::string head;
  const ParamPoly& num = c.num();
  if (num.terms().size() == 1) {
    head = single_term_factor(num.leading());
    if (!head.empty() && head != "-") head += "*";
  } else {
    head = "(" + num.to_string() + ")*";
  }
  std::string out = head + mono;
  if (!c.den().is_constant()) {
    const ParamPoly& den = c.den();
    const bool bare = den.is_monomial() && den.leading().mono.size() == 1;
    out += "/" + (bare ? den.to_string() : "(" + den.to_string() + ")");
  }
  return out;
}

}  // namespace

int Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return value_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  return a.value_ <=> b.value_;
}

Coordinates::Coordinates(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  std::vector<std::string> sorted = *names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate coordinate name");
}

std::size_t Coordinates::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  throw std::invalid_argument("unknown coordinate '" + std::string(name) + "'");
}

bool Coordinates::contains(std::string_view name) const {
  return std::find(names_->begin(), names_->end(), name) != names_->end();
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  return compare_monomials(a, b, MonomialOrder::GradedLex) > 0;
}

std::strong_ordering compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::GradedLex) {
    const unsigned da = exp_sum(a);
    const unsigned db = exp_sum(b);
    if (da != db) return da <=> db;
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

void require_same_coordinates(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.coordinates() == b.coordinates())) throw CoordinateMismatch("polynomials over different coordinate lists");
}

MultiPoly MultiPoly::constant(Coordinates coords, CoeffValue c) {
  MultiPoly p(std::move(coords));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.coords_.size(), 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(Coordinates coords, std::string_view name) {
  MultiPoly p(std::move(coords));
  Exponents e(p.coords_.size(), 0);
  e[p.coords_.index_of(name)] = 1;
  p.terms_.emplace(std::move(e), CoeffValue(1));
  return p;
}

MultiPoly MultiPoly::monomial(Coordinates coords, Exponents e, CoeffValue c) {
  MultiPoly p(std::move(coords));
  if (e.size() != p.coords_.size()) throw std::invalid_argument("exponent vector length differs from coordinate count");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_sum(terms_.begin()->first) == 0);
}

CoeffValue MultiPoly::constant_term() const { return coefficient(Exponents(coords_.size(), 0)); }

CoeffValue MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CoeffValue() : it->second;
}

Degree MultiPoly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(static_cast<int>(exp_sum(terms_.begin()->first)));
}

Degree MultiPoly::degree_in(std::string_view var) const {
  if (terms_.empty()) return Degree::minus_infinity();
  const std::size_t i = coords_.index_of(var);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return Degree(static_cast<int>(d));
}

std::pair<Exponents, CoeffValue> MultiPoly::leading(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  if (order == MonomialOrder::GradedLex) return *terms_.begin();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return *best;
}

bool MultiPoly::has_parameters() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.has_parameters(); });
}

std::set<std::string> MultiPoly::parameters() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_) {
    auto p = c.parameters();
    out.insert(p.begin(), p.end());
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const CoeffValue& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty() && coords_.size() == 0) return *this = o;
  require_same_coordinates(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty() && coords_.size() == 0) return *this = -o;
  require_same_coordinates(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_coordinates(a, b);
  MultiPoly out(a.coords_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const CoeffValue& c) const {
  if (c.is_zero()) return MultiPoly(coords_);
  MultiPoly out(coords_);
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::times_monomial(const Exponents& m, const CoeffValue& c) const {
  MultiPoly out(coords_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) {
    Exponents s(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + m[i];
    out.terms_.emplace(std::move(s), v * c);
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.coords_ == b.coords_) || a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  return true;
}

MultiPoly MultiPoly::embed(const Coordinates& target) const {
  std::vector<std::size_t> where(coords_.size(), target.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (target.contains(coords_[i])) where[i] = target.index_of(coords_[i]);
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] == target.size()) throw CoordinateMismatch("coordinate '" + coords_[i] + "' missing in target ring");
      t[where[i]] = e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

MultiPoly MultiPoly::instantiate(const ParamBindings& bindings) const {
  if (bindings.empty()) return *this;
  return map_coefficients([&](const CoeffValue& c) { return c.substitute(bindings); });
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string s = term_string(coords_, e, c);
    if (out.empty()) {
      out = std::move(s);
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.coordinates(), CoeffValue(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly diff(const MultiPoly& p, std::string_view var) {
  const std::size_t i = p.coordinates().index_of(var);
  MultiPoly out(p.coordinates());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    out += MultiPoly::monomial(p.coordinates(), std::move(d), c * CoeffValue(static_cast<long>(e[i])));
  }
  return out;
}

DivRem divrem(const MultiPoly& p, const MultiPoly& d, MonomialOrder order) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  require_same_coordinates(p, d);
  const auto [lead_e, lead_c] = d.leading(order);
  MultiPoly q(p.coordinates());
  MultiPoly r(p.coordinates());
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    auto [e, c] = rest.leading(order);
    if (monomial_divides(lead_e, e)) {
      Exponents t(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] - lead_e[i];
      const CoeffValue k = c / lead_c;
      q += MultiPoly::monomial(p.coordinates(), t, k);
      rest -= d.times_monomial(t, k);
    } else {
      MultiPoly lt = MultiPoly::monomial(p.coordinates(), e, c);
      r += lt;
      rest -= lt;
    }
  }
  return {std::move(q), std::move(r)};
}

bool divides(const MultiPoly& d, const MultiPoly& p) { return divrem(p, d).remainder.is_zero(); }

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
  auto [q, r] = divrem(p, d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

MultiPoly subst(const MultiPoly& p, const std::map<std::string, MultiPoly, std::less<>>& bindings) {
  const Coordinates& coords = p.coordinates();
  std::vector<const MultiPoly*> image(coords.size(), nullptr);
  for (const auto& [name, value] : bindings) {
    const std::size_t i = coords.index_of(name);
    if (!(value.coordinates() == coords) && !value.is_zero())
      throw CoordinateMismatch("substituted polynomial for '" + name + "' uses other coordinates");
    image[i] = &value;
  }
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> powers;
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MultiPoly base = image[i]->is_zero() ? MultiPoly(coords) : *image[i];
    return powers.emplace(key, pow(base, k)).first->second;
  };
  MultiPoly out(coords);
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    MultiPoly term = MultiPoly::constant(coords, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (image[i] == nullptr || e[i] == 0) continue;
      kept[i] = 0;
      term = term * power_of(i, e[i]);
    }
    out += term.times_monomial(kept, CoeffValue(1));
  }
  return out;
}

std::optional<CoeffValue> constant_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  require_same_coordinates(a, b);
  if (a.size() != b.size()) return std::nullopt;
  const auto [e, cb] = b.leading();
  const CoeffValue ca = a.coefficient(e);
  if (ca.is_zero()) return std::nullopt;
  CoeffValue ratio = ca / cb;
  if (a == b.scaled(ratio)) return ratio;
  return std::nullopt;
}

std::optional<LinearForm> as_linear_form(const MultiPoly& p) {
  if (p.degree() > Degree(1)) return std::nullopt;
  LinearForm lf;
  lf.coefficients.assign(p.coordinates().size(), CoeffValue());
  for (const auto& [e, c] : p.terms()) {
    const auto it = std::find(e.begin(), e.end(), 1u);
    if (it == e.end()) {
      lf.constant = c;
    } else {
      lf.coefficients[static_cast<std::size_t>(it - e.begin())] = c;
    }
  }
  return lf;
}

}  // namespace darboux
