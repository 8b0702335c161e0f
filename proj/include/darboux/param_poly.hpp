#pragma once

#include "darboux/gaussian.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace darboux {

/// Interned parameter name. Copies are a pointer; ordering is by name.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    const int c = a.name_->compare(*b.name_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  const std::string* name_;
};

/// Power product of parameters, sorted by symbol name, no zero exponents.
using ParamMono = std::vector<std::pair<Symbol, unsigned>>;

unsigned total_degree(const ParamMono& m);
ParamMono mono_mul(const ParamMono& a, const ParamMono& b);
/// a / b if b divides a.
std::optional<ParamMono> mono_div(const ParamMono& a, const ParamMono& b);
/// Graded lexicographic comparison (names ascending are most significant).
std::strong_ordering mono_cmp(const ParamMono& a, const ParamMono& b);
std::string mono_to_string(const ParamMono& m);

/// Sparse polynomial in the parameters with Gaussian-rational coefficients.
/// Terms are kept sorted by decreasing graded-lex order, with no zero coefficients.
class ParamPoly {
 public:
  struct Term {
    ParamMono mono;
    GaussQ coeff;
  };

  ParamPoly() = default;
  ParamPoly(GaussQ c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(GaussQ(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamPoly symbol(std::string_view name);
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
  /// Value of a constant polynomial (0 for the zero polynomial).
  GaussQ constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_real() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  std::set<std::string> variables() const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const GaussQ& c) const;
  ParamPoly times_mono(const ParamMono& m) const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Quotient if `d` divides this polynomial exactly, otherwise nullopt.
  std::optional<ParamPoly> exact_div(const ParamPoly& d) const;
  /// Greatest monomial dividing every term (empty for zero).
  ParamMono monomial_content() const;
  ParamPoly divide_mono(const ParamMono& m) const;

  ParamPoly conj() const;
  ParamPoly real_part() const;
  ParamPoly imag_part() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace darboux
