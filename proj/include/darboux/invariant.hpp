#pragma once

#include "darboux/bounds.hpp"
#include "darboux/ellipsoid.hpp"
#include "darboux/unipoly.hpp"
#include "darboux/vector_field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

struct Cofactor {
  MultiPoly k;
  int degree_bound = 0;
  bool on_surface = false;
};

/// Solves lhs = k*factor for k of degree <= bound, identically or modulo the
/// surface ideal when `surface` is given (k is then in normal form).
std::optional<MultiPoly> solve_multiplier(const MultiPoly& lhs, const MultiPoly& factor, int bound,
                                          const Ellipsoid* surface);

/// Cofactor k with X(f) = k f; the default bound is m1 - 1. Throws
/// std::invalid_argument for f = 0.
std::optional<Cofactor> cofactor_solve(const VectorField& x, const MultiPoly& f, const Ellipsoid* surface = nullptr,
                                       std::optional<int> degree_bound = std::nullopt);

enum class Transversality { Verified, TangentRejected, Unchecked };
std::string to_string(Transversality t);

struct InvariantHypersurface {
  MultiPoly f;
  Cofactor cofactor;
  Transversality transversality = Transversality::Unchecked;
  std::optional<Tangency> tangency;
  std::optional<unsigned> multiplicity;
};

struct InvarianceCheck {
  std::optional<InvariantHypersurface> certificate;  // present whenever a cofactor exists
  std::string rejection;                             // empty when accepted
  bool accepted() const { return certificate.has_value() && rejection.empty(); }
};

/// Cofactor solve, then for hyperplanes on a surface a tangency test, then an
/// independent re-verification of X(f) - k f.
InvarianceCheck invariance_check(const VectorField& x, const MultiPoly& f, const Ellipsoid* surface = nullptr,
                                 std::optional<int> degree_bound = std::nullopt);

struct ExponentialFactor {
  MultiPoly g;
  MultiPoly h;
  MultiPoly l;
  /// deg L <= m1 - 1, the degree allowed for exponential factors.
  bool within_degree_bound = false;
};

struct ExpFactorCheck {
  std::optional<ExponentialFactor> factor;
  std::string rejection;
};

/// Finds L with h X(g) - g X(h) = L h^2. L is searched up to the degree of the
/// left side, and within_degree_bound records whether deg L <= m1 - 1.
/// Throws std::invalid_argument for h = 0.
ExpFactorCheck exp_factor_check(const VectorField& x, const MultiPoly& g, const MultiPoly& h,
                                const Ellipsoid* surface = nullptr);

/// Raised by extactic for a linearly dependent basis; `relation` gives the
/// vanishing combination of the basis elements.
class DependentBasis : public std::invalid_argument {
 public:
  DependentBasis(const std::string& what, std::vector<CoeffValue> relation)
      : std::invalid_argument(what), relation(std::move(relation)) {}
  std::vector<CoeffValue> relation;
};

struct FoundFactor {
  MultiPoly form;
  unsigned multiplicity = 0;
};

struct ExtacticReport {
  std::vector<MultiPoly> basis;
  MultiPoly ew;
  bool degenerate = false;
  std::vector<FoundFactor> factors_found;
  /// ew divided by the found factor powers.
  MultiPoly residual;
};

/// det[X^j(v_i)] for j = 0..l-1. The coordinate variables and any `candidates`
/// that divide E_W are split off into factors_found.
ExtacticReport extactic(const VectorField& x, const std::vector<MultiPoly>& basis,
                        const std::vector<MultiPoly>& candidates = {});

/// Largest k with f^k | E_W. Throws std::invalid_argument if the report is
/// degenerate or f does not divide E_W.
unsigned multiplicity(const MultiPoly& f, const ExtacticReport& report);
unsigned multiplicity(const MultiPoly& f, const MultiPoly& ew);

/// Raised when a field fails the on-surface condition; carries the residual.
class NotOnSurface : public std::invalid_argument {
 public:
  explicit NotOnSurface(MultiPoly residual);
  MultiPoly residual;
};

struct PlaneSearch {
  ExtacticReport extactic;
  MultiPoly reduced;         // normal form of E_W
  bool degenerate = false;   // infinitely many candidates: no finite answer
  bool searched = false;     // a root search was carried out
  std::string note;
  std::vector<InvariantHypersurface> found;  // accepted planes, canonical order
  std::vector<std::string> rejected;         // candidates that failed, with reasons
  std::vector<UniPoly> unresolved;           // residual factors without Gaussian roots
  BoundReport bound;
  bool within_bound = true;
};

/// Invariant meridians: W = {x_1..x_n}. For n = 2 and concrete coefficients the
/// pencil is solved exactly; otherwise only the given candidates are verified.
/// Throws NotOnSurface.
PlaneSearch find_meridians(const VectorField& x, const Ellipsoid& e, const std::vector<MultiPoly>& candidates = {});
/// Invariant parallels x_{n+1} = c via W = {1, x_{n+1}}. Throws NotOnSurface.
PlaneSearch find_parallels(const VectorField& x, const Ellipsoid& e, const std::vector<MultiPoly>& candidates = {});
/// Accepted planes whose coefficients are all real.
std::vector<InvariantHypersurface> real_planes(const PlaneSearch& s);

/// Scales a nonzero linear form so that its first nonzero coefficient is 1.
MultiPoly normalize_linear_form(const MultiPoly& f);

}  // namespace darboux
