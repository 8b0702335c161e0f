#include "darboux/param_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace darboux {

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::set<std::string, std::less<>>& intern_table() {
  static std::set<std::string, std::less<>> table;
  return table;
}

struct MonoGreater {
  bool operator()(const ParamMono& a, const ParamMono& b) const { return mono_cmp(a, b) > 0; }
};

std::string term_to_string(const GaussQ& c, const ParamMono& m) {
  if (m.empty()) return c.to_string();
  const std::string mono = mono_to_string(m);
  if (c.is_one()) return mono;
  if (c == GaussQ(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  std::lock_guard lock(intern_mutex());
  auto& table = intern_table();
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  name_ = &*it;
}

unsigned total_degree(const ParamMono& m) {
  unsigned d = 0;
  for (const auto& [s, e] : m) d += e;
  return d;
}

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first == j->first) {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

std::optional<ParamMono> mono_div(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  auto i = a.begin();
  for (const auto& [s, e] : b) {
    while (i != a.end() && i->first < s) out.push_back(*i++);
    if (i == a.end() || !(i->first == s) || i->second < e) return std::nullopt;
    if (i->second > e) out.emplace_back(s, i->second - e);
    ++i;
  }
  out.insert(out.end(), i, a.end());
  return out;
}

std::strong_ordering mono_cmp(const ParamMono& a, const ParamMono& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da <=> db;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second <=> b[j].second;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < a.size()) return std::strong_ordering::greater;
  if (j < b.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string mono_to_string(const ParamMono& m) {
  std::string out;
  for (const auto& [s, e] : m) {
    if (!out.empty()) out += "*";
    out += s.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

ParamPoly::ParamPoly(GaussQ c) {
  if (!c.is_zero()) terms_.push_back({{}, std::move(c)});
}

ParamPoly ParamPoly::symbol(std::string_view name) {
  ParamPoly p;
  p.terms_.push_back({{{Symbol(name), 1u}}, GaussQ(1)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::map<ParamMono, GaussQ, MonoGreater> acc;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  ParamPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, c});
  }
  return p;
}

GaussQ ParamPoly::constant_value() const {
  if (terms_.empty()) return GaussQ();
  return terms_.back().mono.empty() ? terms_.back().coeff : GaussQ();
}

bool ParamPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

unsigned ParamPoly::total_degree() const { return terms_.empty() ? 0 : darboux::total_degree(terms_.front().mono); }

std::set<std::string> ParamPoly::variables() const {
  std::set<std::string> out;
  for (const auto& t : terms_)
    for (const auto& [s, e] : t.mono) out.insert(s.name());
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    const auto c = mono_cmp(i->mono, j->mono);
    if (c > 0) {
      out.terms_.push_back(*i++);
    } else if (c < 0) {
      out.terms_.push_back(*j++);
    } else {
      GaussQ s = i->coeff + j->coeff;
      if (!s.is_zero()) out.terms_.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), i, a.terms_.end());
  out.terms_.insert(out.terms_.end(), j, b.terms_.end());
  return out;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (a.is_constant()) return b.scaled(a.constant_value());
  std::map<ParamMono, GaussQ, MonoGreater> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      GaussQ c = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(mono_mul(s.mono, t.mono), c);
      if (!inserted) it->second += c;
    }
  }
  ParamPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({m, c});
  }
  return out;
}

ParamPoly ParamPoly::scaled(const GaussQ& c) const {
  if (c.is_zero()) return {};
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

ParamPoly ParamPoly::times_mono(const ParamMono& m) const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.mono = mono_mul(t.mono, m);
  return p;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].mono != b.terms_[k].mono || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

std::optional<ParamPoly> ParamPoly::exact_div(const ParamPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero parameter polynomial");
  if (is_zero()) return ParamPoly();
  if (d.is_constant()) return scaled(GaussQ(1) / d.constant_value());
  const Term& lead = d.terms_.front();
  if (darboux::total_degree(terms_.front().mono) < darboux::total_degree(lead.mono)) return std::nullopt;
  std::vector<Term> quotient;
  ParamPoly rest = *this;
  while (!rest.is_zero()) {
    const Term& lt = rest.terms_.front();
    auto m = mono_div(lt.mono, lead.mono);
    if (!m) return std::nullopt;
    Term t{*m, lt.coeff / lead.coeff};
    ParamPoly step;
    step.terms_.push_back(t);
    rest = rest - step * d;
    quotient.push_back(std::move(t));
  }
  return from_terms(std::move(quotient));
}

ParamMono ParamPoly::monomial_content() const {
  if (terms_.empty()) return {};
  ParamMono g = terms_.front().mono;
  for (std::size_t k = 1; k < terms_.size() && !g.empty(); ++k) {
    ParamMono next;
    const ParamMono& m = terms_[k].mono;
    auto j = m.begin();
    for (const auto& [s, e] : g) {
      while (j != m.end() && j->first < s) ++j;
      if (j != m.end() && j->first == s) next.emplace_back(s, std::min(e, j->second));
    }
    g = std::move(next);
  }
  return g;
}

ParamPoly ParamPoly::divide_mono(const ParamMono& m) const {
  if (m.empty()) return *this;
  ParamPoly p = *this;
  for (auto& t : p.terms_) {
    auto q = mono_div(t.mono, m);
    if (!q) throw std::logic_error("divide_mono: monomial does not divide every term");
    t.mono = std::move(*q);
  }
  return p;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.coeff = t.coeff.conj();
  return p;
}

ParamPoly ParamPoly::real_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.mono, GaussQ(t.coeff.re())});
  return from_terms(std::move(out));
}

ParamPoly ParamPoly::imag_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.mono, GaussQ(t.coeff.im())});
  return from_terms(std::move(out));
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string s = term_to_string(t.coeff, t.mono);
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

}  // namespace darboux
