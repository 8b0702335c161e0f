#pragma once

#include "darboux/ellipsoid.hpp"
#include "darboux/vector_field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

struct DarbouxRelation {
  std::vector<CoeffValue> lambdas;
  std::vector<CoeffValue> mus;
  CoeffValue sigma;
  bool is_first_integral() const { return sigma.is_zero(); }
};

/// Basis of the relations sum lambda_i K_i + sum mu_j L_j + sigma = 0 (sigma
/// forced to zero unless allow_sigma), with the all-zero (lambda, mu) part
/// excluded. Each vector is scaled so its first nonzero lambda/mu is 1.
/// Throws std::invalid_argument when both lists are empty.
std::vector<DarbouxRelation> solve_relation(const std::vector<MultiPoly>& k, const std::vector<MultiPoly>& l,
                                            const Ellipsoid* surface, bool allow_sigma);

/// exp(g/h) as a Darboux factor.
struct ExpPair {
  MultiPoly g;
  MultiPoly h;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DarbouxFunction {
  std::vector<std::pair<MultiPoly, CoeffValue>> factors;  // f_i^lambda_i
  std::vector<std::pair<ExpPair, CoeffValue>> exp_factors;  // exp(g_j/h_j)^mu_j
  CoeffValue sigma;                                       // time factor e^{sigma t}
  /// Product of the factors when every exponent is a nonnegative integer and
  /// there are no exponential factors.
  std::optional<MultiPoly> polynomial;
  /// The denominator-cleared logarithmic-derivative identity that was checked.
  MultiPoly identity;
  std::string rendering;
  bool sigma_is_real() const { return sigma.is_real(); }
};

/// Verifies sum lambda_i X(f_i)(F/f_i)H + sum mu_j (h_j X(g_j) - g_j X(h_j))(H/h_j^2)F
/// + sigma F H = 0 with F = prod f_i and H = prod h_j^2, identically or in
/// normal form. Throws std::invalid_argument for an all-zero relation or size
/// mismatch and VerificationFailure when the identity fails.
DarbouxFunction build_darboux_function(const VectorField& x, const std::vector<MultiPoly>& f,
                                       const std::vector<ExpPair>& exps, const DarbouxRelation& relation,
                                       const Ellipsoid* surface = nullptr);

/// The conjugate pair f^lambda conj(f)^conj(lambda) as
/// ((Re f)^2 + (Im f)^2)^{Re lambda} exp(-2 Im lambda arctan(Im f / Re f)).
struct RealForm {
  MultiPoly re_f;
  MultiPoly im_f;
  CoeffValue re_lambda;
  CoeffValue im_lambda;
  MultiPoly modulus_squared;
  bool has_arctan = false;
  std::string rendering;
};
/// Throws std::invalid_argument when f and lambda are both real.
RealForm realify_pair(const MultiPoly& f, const CoeffValue& lambda);

/// The pair exp(mu g/h) exp(conj(mu g/h)) = exp(2 Re(mu g/h)), with
/// Re(mu g/h) = numerator/denominator and denominator = h conj(h).
struct RealExpForm {
  MultiPoly numerator;
  MultiPoly denominator;
  std::string rendering;
};
RealExpForm realify_exp_pair(const MultiPoly& g, const MultiPoly& h, const CoeffValue& mu);

MultiPoly real_part(const MultiPoly& p);
MultiPoly imag_part(const MultiPoly& p);
MultiPoly conj(const MultiPoly& p);

}  // namespace darboux
