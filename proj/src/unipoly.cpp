#include "darboux/unipoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

namespace darboux {

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

mpz_class norm(const GaussInt& g) { return g.re * g.re + g.im * g.im; }

bool gauss_divides(const GaussInt& d, const GaussInt& g) {
  const mpz_class n = norm(d);
  const mpz_class a = g.re * d.re + g.im * d.im;
  const mpz_class b = g.im * d.re - g.re * d.im;
  return mpz_divisible_p(a.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(b.get_mpz_t(), n.get_mpz_t());
}

// Trial-division factorization; the inputs here are norms of small Gaussian integers.
std::vector<std::pair<mpz_class, unsigned>> factor(mpz_class n) {
  if (n > mpz_class("1000000000000000000"))
    throw std::runtime_error("coefficient too large for Gaussian divisor search: " + n.get_str());
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<mpz_class> integer_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Divisors of g up to units, each represented with re > 0, im >= 0.
std::vector<GaussInt> gauss_divisors(const GaussInt& g) {
  std::vector<GaussInt> out;
  for (const mpz_class& k : integer_divisors(norm(g))) {
    mpz_class u = 0;
    while (u * u <= k) {
      const mpz_class rest = k - u * u;
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        const mpz_class v = sqrt(rest);
        for (const GaussInt& d : {GaussInt{u, v}, GaussInt{v, u}}) {
          if (sgn(d.re) > 0 && gauss_divides(d, g)) out.push_back(d);
        }
      }
      ++u;
    }
  }
  return out;
}

GaussQ to_gauss(const GaussInt& g) { return GaussQ(mpq_class(g.re), mpq_class(g.im)); }

std::vector<GaussInt> integral_coefficients(const std::vector<GaussQ>& c) {
  mpz_class l = 1;
  for (const auto& v : c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  for (const auto& v : c) {
    const mpq_class r = v.re() * l;
    const mpq_class i = v.im() * l;
    out.push_back({r.get_num(), i.get_num()});
  }
  return out;
}

std::vector<GaussQ> deflate(const std::vector<GaussQ>& c, const GaussQ& r) {
  // Synthetic division by (t - r); c is ascending and r is a root.
  std::vector<GaussQ> q(c.size() - 1);
  GaussQ acc;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * r + c[k + 1];
    q[k] = acc;
  }
  return q;
}

GaussQ horner(const std::vector<GaussQ>& c, const GaussQ& t) {
  GaussQ acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

UniPoly::UniPoly(std::string var, std::vector<CoeffValue> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree UniPoly::degree() const {
  return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1);
}

const CoeffValue& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

bool UniPoly::has_parameters() const {
  return std::any_of(c_.begin(), c_.end(), [](const CoeffValue& v) { return v.has_parameters(); });
}

CoeffValue UniPoly::evaluate(const CoeffValue& t) const {
  CoeffValue acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<CoeffValue> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * CoeffValue(static_cast<long>(k)));
  return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(CoeffValue(1) / c_.back());
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<CoeffValue> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return UniPoly(a.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.scaled(CoeffValue(-1)); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var_, {});
  std::vector<CoeffValue> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(a.var_, std::move(c));
}

UniPoly UniPoly::scaled(const CoeffValue& k) const {
  std::vector<CoeffValue> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(v * k);
  return UniPoly(var_, std::move(c));
}

std::string UniPoly::to_string() const { return to_multipoly().to_string(); }

MultiPoly UniPoly::to_multipoly() const {
  Coordinates coords({var_});
  MultiPoly p(coords);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    p += MultiPoly::monomial(coords, {static_cast<unsigned>(k)}, c_[k]);
  }
  return p;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<CoeffValue> r = a.coefficients();
  const auto& bc = b.coefficients();
  if (r.size() < bc.size()) return {UniPoly(a.variable(), {}), a};
  std::vector<CoeffValue> q(r.size() - bc.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const CoeffValue t = r[k + bc.size() - 1] / bc.back();
    q[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= t * bc[j];
  }
  return {UniPoly(a.variable(), std::move(q)), UniPoly(a.variable(), std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a;
  UniPoly v = b;
  while (!v.is_zero()) {
    UniPoly r = divrem(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

GaussianRoots gaussian_roots(const UniPoly& u) {
  if (u.is_zero()) throw std::domain_error("root search on the zero polynomial");
  if (u.has_parameters())
    throw ParametricInput("root search needs concrete coefficients; instantiate the parameters first");
  std::vector<GaussQ> c;
  for (const auto& v : u.coefficients()) c.push_back(*v.as_gaussian());

  GaussianRoots out;
  unsigned zero_mult = 0;
  while (c.size() > 1 && c.front().is_zero()) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(GaussQ(), zero_mult);

  if (c.size() > 1) {
    const auto ints = integral_coefficients(c);
    std::set<GaussQ> candidates;
    const std::vector<GaussQ> units{GaussQ(1), GaussQ(-1), GaussQ::i(), -GaussQ::i()};
    const auto lead_divs = gauss_divisors(ints.back());
    for (const auto& p : gauss_divisors(ints.front())) {
      for (const auto& q : lead_divs) {
        const GaussQ base = to_gauss(p) / to_gauss(q);
        for (const auto& unit : units) candidates.insert(base * unit);
      }
    }
    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (c.size() > 1 && horner(c, r).is_zero()) {
        c = deflate(c, r);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(r, mult);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  std::vector<CoeffValue> residual;
  for (const auto& v : c) residual.emplace_back(v);
  out.residual = UniPoly(u.variable(), std::move(residual)).monic();
  return out;
}

}  // namespace darboux
