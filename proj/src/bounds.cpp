#include "darboux/bounds.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

namespace darboux {

namespace {

void require_n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("bound formulas need n >= 2");
}

unsigned long long sum_first(const std::vector<int>& m, std::size_t k) {
  if (m.size() < k) throw std::invalid_argument("degree vector has fewer than " + std::to_string(k) + " entries");
  long long s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i] < 0) throw std::invalid_argument("negative degree in bound formula");
    s += m[i];
  }
  return static_cast<unsigned long long>(s);
}

unsigned long long leading_factor(const std::vector<int>& m) {
  if (m.empty() || m[0] < 1) throw std::invalid_argument("bound formulas need m_1 >= 1");
  return static_cast<unsigned long long>(m[0] - 1);
}

}  // namespace

BoundReport bound_hyperplanes_Rn(std::size_t n, const std::vector<int>& m_sorted, bool through_point) {
  require_n(n);
  BoundReport r;
  r.n = n;
  r.m = m_sorted;
  const auto nn = static_cast<long long>(n);
  if (through_point) {
    r.formula = "C(n-1,2)(m1-1) + sum_{k<=n-1} m_k + 1";
    r.value = binomial(nn - 1, 2) * leading_factor(m_sorted) + sum_first(m_sorted, n - 1) + 1;
  } else {
    r.formula = "C(n,2)(m1-1) + sum_{k<=n} m_k";
    r.value = binomial(nn, 2) * leading_factor(m_sorted) + sum_first(m_sorted, n);
  }
  return r;
}

BoundReport bound_meridians(std::size_t n, const std::vector<int>& m_sorted) {
  require_n(n);
  BoundReport r;
  r.n = n;
  r.m = m_sorted;
  r.formula = "C(n-1,2)(m1-1) + sum_{i<=n-1} m_i + 1";
  r.value = binomial(static_cast<long long>(n) - 1, 2) * leading_factor(m_sorted) + sum_first(m_sorted, n - 1) + 1;
  return r;
}

BoundReport bound_parallels(const DegreeVector& m) {
  BoundReport r;
  r.formula = "m_{n+1}";
  r.n = m.sorted.empty() ? 0 : m.sorted.size() - 1;
  for (const auto& d : m.sorted) r.m.push_back(d.is_minus_infinity() ? -1 : d.value());
  if (m.sorted.empty() || m.sorted.back().is_minus_infinity()) {
    r.note = "a component vanishes identically; finitely many parallels is not guaranteed";
    return r;
  }
  r.value = static_cast<unsigned long long>(m.sorted.back().value());
  return r;
}

Thresholds integrability_thresholds(std::size_t n, unsigned m1, ThresholdContext context) {
  require_n(n);
  if (m1 < 1) throw std::invalid_argument("thresholds need m1 >= 1");
  Thresholds t;
  t.context = context;
  t.n = n;
  t.m1 = m1;
  const auto nn = static_cast<long long>(n);
  if (context == ThresholdContext::Ambient) {
    const unsigned long long base = binomial(nn + m1 - 1, m1 - 1);
    t.darboux = base + 1;
    t.rational = base + n;
    return t;
  }
  const mpq_class factor(static_cast<unsigned long>(n + 2 * m1), static_cast<unsigned long>(n + m1));
  mpq_class prod = factor * mpq_class(static_cast<unsigned long>(binomial(nn + m1, m1)));
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("ellipsoid threshold is not an integer: " + prod.get_str());
  const unsigned long long base = prod.get_num().get_ui();
  t.darboux = base + 1;
  t.rational = base + n;
  t.dim_plus_one = dim_on_surface(n, m1) + 1;
  t.agrees_with_dim = *t.dim_plus_one == t.darboux;
  return t;
}

ThresholdVerdict check_threshold(unsigned long long p, unsigned long long q, const Thresholds& t) {
  ThresholdVerdict v;
  const unsigned long long s = p + q;
  v.relation_guaranteed = s >= t.darboux;
  v.rational_integral_guaranteed = s >= t.rational;
  if (v.rational_integral_guaranteed) {
    v.text = "rational first integral guaranteed";
  } else if (v.relation_guaranteed) {
    v.text = "relation guaranteed";
  } else {
    v.text = "no guarantee";
  }
  return v;
}

}  // namespace darboux
