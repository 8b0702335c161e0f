#include "darboux/integrability.hpp"

#include "darboux/linalg.hpp"

#include <algorithm>
#include <map>

namespace darboux {

namespace {

std::optional<unsigned long> nonnegative_integer(const CoeffValue& v) {
  auto g = v.as_gaussian();
  if (!g || !g->is_real() || !g->is_integral() || sgn(g->re()) < 0 || !g->re().get_num().fits_ulong_p())
    return std::nullopt;
  return g->re().get_num().get_ui();
}

std::string power_string(const std::string& base, const CoeffValue& e) {
  if (e.is_one()) return "(" + base + ")";
  return "(" + base + ")^(" + e.to_string() + ")";
}

}  // namespace

MultiPoly real_part(const MultiPoly& p) {
  return p.map_coefficients([](const CoeffValue& c) { return c.real_part(); });
}

MultiPoly imag_part(const MultiPoly& p) {
  return p.map_coefficients([](const CoeffValue& c) { return c.imag_part(); });
}

MultiPoly conj(const MultiPoly& p) {
  return p.map_coefficients([](const CoeffValue& c) { return c.conj(); });
}

std::vector<DarbouxRelation> solve_relation(const std::vector<MultiPoly>& k, const std::vector<MultiPoly>& l,
                                            const Ellipsoid* surface, bool allow_sigma) {
  if (k.empty() && l.empty()) throw std::invalid_argument("relation search needs at least one cofactor");
  std::vector<MultiPoly> cols;
  for (const auto& p : k) cols.push_back(surface != nullptr ? normal_form(p, *surface) : p);
  for (const auto& p : l) cols.push_back(surface != nullptr ? normal_form(p, *surface) : p);
  const std::size_t pq = cols.size();
  const std::size_t unknowns = pq + (allow_sigma ? 1 : 0);

  std::map<Exponents, std::size_t> rows;
  std::size_t nvars = 0;
  for (const auto& p : cols) {
    if (!p.is_zero()) nvars = p.coordinates().size();
    for (const auto& [e, c] : p.terms()) rows.emplace(e, rows.size());
  }
  if (allow_sigma) rows.emplace(Exponents(nvars, 0), rows.size());
  Matrix a(rows.size(), std::vector<CoeffValue>(unknowns));
  for (std::size_t j = 0; j < pq; ++j)
    for (const auto& [e, c] : cols[j].terms()) a[rows.at(e)][j] = c;
  if (allow_sigma) a[rows.at(Exponents(nvars, 0))][pq] = CoeffValue(1);

  std::vector<DarbouxRelation> out;
  for (auto& v : nullspace(a, unknowns)) {
    auto first = std::find_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pq),
                              [](const CoeffValue& c) { return !c.is_zero(); });
    if (first == v.begin() + static_cast<std::ptrdiff_t>(pq)) continue;
    const CoeffValue scale = CoeffValue(1) / *first;
    for (auto& c : v) c *= scale;
    for (const auto& row : a) {
      CoeffValue dot;
      for (std::size_t j = 0; j < unknowns; ++j) dot += row[j] * v[j];
      if (!dot.is_zero()) throw std::logic_error("relation failed re-verification");
    }
    DarbouxRelation r;
    r.lambdas.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k.size()));
    r.mus.assign(v.begin() + static_cast<std::ptrdiff_t>(k.size()), v.begin() + static_cast<std::ptrdiff_t>(pq));
    if (allow_sigma) r.sigma = v[pq];
    out.push_back(std::move(r));
  }
  return out;
}

DarbouxFunction build_darboux_function(const VectorField& x, const std::vector<MultiPoly>& f,
                                       const std::vector<ExpPair>& exps, const DarbouxRelation& relation,
                                       const Ellipsoid* surface) {
  if (relation.lambdas.size() != f.size() || relation.mus.size() != exps.size())
    throw std::invalid_argument("relation size does not match the number of factors");
  const bool all_zero =
      std::all_of(relation.lambdas.begin(), relation.lambdas.end(), [](const CoeffValue& c) { return c.is_zero(); }) &&
      std::all_of(relation.mus.begin(), relation.mus.end(), [](const CoeffValue& c) { return c.is_zero(); });
  if (all_zero) throw std::invalid_argument("relation exponents are all zero");

  const Coordinates& coords = x.coordinates();
  const MultiPoly one = MultiPoly::constant(coords, CoeffValue(1));
  auto product_except = [&](const std::vector<MultiPoly>& items, std::size_t skip) {
    MultiPoly p = one;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (i != skip) p = p * items[i];
    return p;
  };
  std::vector<MultiPoly> h2;
  for (const auto& e : exps) {
    if (e.h.is_zero()) throw std::invalid_argument("exponential factor with zero denominator");
    h2.push_back(e.h * e.h);
  }
  const MultiPoly big_f = product_except(f, f.size());
  const MultiPoly big_h = product_except(h2, h2.size());

  MultiPoly identity(coords);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (relation.lambdas[i].is_zero()) continue;
    identity += (lie_derivative(x, f[i]) * product_except(f, i) * big_h).scaled(relation.lambdas[i]);
  }
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (relation.mus[j].is_zero()) continue;
    const MultiPoly num = exps[j].h * lie_derivative(x, exps[j].g) - exps[j].g * lie_derivative(x, exps[j].h);
    identity += (num * product_except(h2, j) * big_f).scaled(relation.mus[j]);
  }
  identity += (big_f * big_h).scaled(relation.sigma);
  if (surface != nullptr) identity = normal_form(identity, *surface);

  DarbouxFunction out;
  out.sigma = relation.sigma;
  out.identity = identity;
  if (!identity.is_zero())
    throw VerificationFailure("logarithmic derivative identity fails; residual " + identity.to_string());

  std::vector<std::string> parts;
  bool integral = exps.empty();
  MultiPoly prod = one;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (relation.lambdas[i].is_zero()) continue;
    out.factors.emplace_back(f[i], relation.lambdas[i]);
    parts.push_back(power_string(f[i].to_string(), relation.lambdas[i]));
    if (auto e = nonnegative_integer(relation.lambdas[i]); e && integral) {
      prod = prod * pow(f[i], static_cast<unsigned>(*e));
    } else {
      integral = false;
    }
  }
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (relation.mus[j].is_zero()) continue;
    out.exp_factors.emplace_back(exps[j], relation.mus[j]);
    std::string arg = "(" + exps[j].g.to_string() + ")";
    if (!(exps[j].h.is_constant() && exps[j].h.constant_term().is_one())) arg += "/(" + exps[j].h.to_string() + ")";
    parts.push_back(power_string("exp(" + arg + ")", relation.mus[j]));
  }
  if (!relation.sigma.is_zero()) parts.push_back("exp((" + relation.sigma.to_string() + ")*t)");
  if (integral) out.polynomial = prod;
  for (std::size_t i = 0; i < parts.size(); ++i) out.rendering += (i ? "*" : "") + parts[i];
  return out;
}

RealForm realify_pair(const MultiPoly& f, const CoeffValue& lambda) {
  RealForm r;
  r.re_f = real_part(f);
  r.im_f = imag_part(f);
  r.re_lambda = lambda.real_part();
  r.im_lambda = lambda.imag_part();
  if (r.im_f.is_zero() && r.im_lambda.is_zero())
    throw std::invalid_argument("polynomial and exponent are real; nothing to realify");
  r.modulus_squared = r.re_f * r.re_f + r.im_f * r.im_f;
  r.has_arctan = !r.im_lambda.is_zero();
  r.rendering = power_string(r.modulus_squared.to_string(), r.re_lambda);
  if (r.has_arctan) {
    r.rendering += "*exp(-2*(" + r.im_lambda.to_string() + ")*arctan((" + r.im_f.to_string() + ")/(" +
                   r.re_f.to_string() + ")))";
  }
  return r;
}

RealExpForm realify_exp_pair(const MultiPoly& g, const MultiPoly& h, const CoeffValue& mu) {
  if (h.is_zero()) throw std::invalid_argument("exponential factor with zero denominator");
  RealExpForm r;
  r.numerator = real_part((g * conj(h)).scaled(mu));
  r.denominator = real_part(h * conj(h));
  if (r.numerator.is_zero()) {
    r.rendering = "1";
  } else {
    r.rendering = "exp(2*(" + r.numerator.to_string() + ")/(" + r.denominator.to_string() + "))";
  }
  return r;
}

}  // namespace darboux
