#pragma once

#include "darboux/coeff.hpp"

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace darboux {

/// Total degree with a distinguished value for the zero polynomial.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(int value) : value_(value), finite_(true) {}

  bool is_minus_infinity() const { return !finite_; }
  /// Throws std::logic_error for minus infinity.
  int value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  Degree() = default;
  int value_ = 0;
  bool finite_ = false;
};

class CoordinateMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered coordinate names shared by a family of polynomials.
class Coordinates {
 public:
  Coordinates() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Coordinates(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return *names_; }
  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  /// Throws std::invalid_argument for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Coordinates& a, const Coordinates& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order in which the last coordinate is most significant.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class MonomialOrder { GradedLex, Lex };

/// Compare two exponent vectors under the given order (last coordinate highest).
std::strong_ordering compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);

/// Sparse polynomial over CoeffValue in a fixed list of coordinates.
/// Terms are ordered by decreasing GradedLex; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, CoeffValue, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(Coordinates coords) : coords_(std::move(coords)) {}
  static MultiPoly constant(Coordinates coords, CoeffValue c);
  static MultiPoly variable(Coordinates coords, std::string_view name);
  static MultiPoly monomial(Coordinates coords, Exponents e, CoeffValue c);

  const Coordinates& coordinates() const { return coords_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  CoeffValue constant_term() const;
  CoeffValue coefficient(const Exponents& e) const;
  Degree degree() const;
  Degree degree_in(std::string_view var) const;
  /// Leading term under the given order; precondition: nonzero.
  std::pair<Exponents, CoeffValue> leading(MonomialOrder order = MonomialOrder::GradedLex) const;
  bool has_parameters() const;
  std::set<std::string> parameters() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const CoeffValue& c) const;
  friend MultiPoly operator*(const CoeffValue& c, const MultiPoly& p) { return p.scaled(c); }
  MultiPoly times_monomial(const Exponents& e, const CoeffValue& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Re-expresses the polynomial over `target`, which must contain every
  /// coordinate that actually occurs.
  MultiPoly embed(const Coordinates& target) const;
  /// Applies a coefficient-level map (parameter instantiation, conjugation...).
  template <typename F>
  MultiPoly map_coefficients(F&& f) const {
    MultiPoly out(coords_);
    for (const auto& [e, c] : terms_) {
      CoeffValue v = f(c);
      if (!v.is_zero()) out.terms_.emplace(e, std::move(v));
    }
    return out;
  }
  MultiPoly instantiate(const ParamBindings& bindings) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const CoeffValue& c);

  Coordinates coords_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Throws CoordinateMismatch unless both operands share coordinates.
void require_same_coordinates(const MultiPoly& a, const MultiPoly& b);

MultiPoly pow(const MultiPoly& p, unsigned k);
/// Formal partial derivative; parameters are constants.
MultiPoly diff(const MultiPoly& p, std::string_view var);

struct DivRem {
  MultiPoly quotient;
  MultiPoly remainder;
};
/// Multivariate division by a single divisor: p = q*d + r with no term of r
/// divisible by the leading monomial of d. Throws std::domain_error for d = 0.
DivRem divrem(const MultiPoly& p, const MultiPoly& d, MonomialOrder order = MonomialOrder::GradedLex);
bool divides(const MultiPoly& d, const MultiPoly& p);
/// p / d when exact; throws std::domain_error otherwise.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

/// Simultaneous substitution of coordinates by polynomials over the same coordinates.
MultiPoly subst(const MultiPoly& p, const std::map<std::string, MultiPoly, std::less<>>& bindings);

/// Ratio c with a = c*b when both are nonzero and proportional by a constant.
std::optional<CoeffValue> constant_ratio(const MultiPoly& a, const MultiPoly& b);

/// Coefficient vector (c_1..c_n, c_0) of a polynomial of degree <= 1, or nullopt.
struct LinearForm {
  std::vector<CoeffValue> coefficients;
  CoeffValue constant;
};
std::optional<LinearForm> as_linear_form(const MultiPoly& p);

}  // namespace darboux
