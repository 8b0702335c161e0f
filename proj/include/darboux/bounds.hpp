#pragma once

#include "darboux/vector_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace darboux {

struct BoundReport {
  std::string formula;
  std::size_t n = 0;
  std::vector<int> m;                    // the degree data the formula read
  std::optional<unsigned long long> value;  // empty when degenerate
  std::string note;
  bool degenerate() const { return !value.has_value(); }
};

/// Invariant hyperplanes of a field in R^n with sorted degrees m; through_point
/// selects the count of hyperplanes through a common point. Throws for n < 2.
BoundReport bound_hyperplanes_Rn(std::size_t n, const std::vector<int>& m_sorted, bool through_point);
/// Invariant meridians on the n-ellipsoid (m sorted, length >= n-1).
BoundReport bound_meridians(std::size_t n, const std::vector<int>& m_sorted);
/// Invariant parallels: the last entry of the sorted degree vector; a zero
/// component makes the bound degenerate.
BoundReport bound_parallels(const DegreeVector& m);

enum class ThresholdContext { Ambient, Ellipsoid };

struct Thresholds {
  ThresholdContext context = ThresholdContext::Ambient;
  std::size_t n = 0;
  unsigned m1 = 0;
  unsigned long long darboux = 0;   // p + q at which a relation is guaranteed
  unsigned long long rational = 0;  // p + q at which a rational first integral is guaranteed
  /// Ellipsoid only: d(m1) + 1 and whether it coincides with `darboux`.
  std::optional<unsigned long long> dim_plus_one;
  bool agrees_with_dim = false;
};

/// Throws std::invalid_argument for n < 2 or m1 < 1; std::logic_error if the
/// ellipsoid prefactor product is not an integer.
Thresholds integrability_thresholds(std::size_t n, unsigned m1, ThresholdContext context);

struct ThresholdVerdict {
  bool relation_guaranteed = false;
  bool rational_integral_guaranteed = false;
  std::string text;
};
ThresholdVerdict check_threshold(unsigned long long p, unsigned long long q, const Thresholds& t);

}  // namespace darboux
