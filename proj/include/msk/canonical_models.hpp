#ifndef MSK_CANONICAL_MODELS_HPP
#define MSK_CANONICAL_MODELS_HPP

#include <string>
#include <vector>

#include "msk/forms.hpp"
#include "msk/orthogonality.hpp"

namespace msk {

// Darboux chart on a bundle of k-forms over an n-dimensional base:
// coordinates x1..xn followed by one momentum p_I per admissible increasing
// k-index I, with Theta = sum p_I dx^I and Omega = d Theta. Horizontal
// models restrict I to at most r-1 fiber indices. one_nondegenerate records
// the exact kernel check of Omega at the pointwise level; it holds for
// every unrestricted model but can genuinely fail for horizontal models
// whose fiber directions miss every admissible index (e.g. r = 1 with a
// nonempty fiber).
struct DarbouxModel {
  int base_dim = 0;       // n = dim Q
  int form_degree = 0;    // k: degree of Theta; Omega has degree k+1
  int horizontal_r = 0;   // 0 for the unrestricted model
  Chart base_chart;       // Q coordinates (split into base/fiber if horizontal)
  Chart chart;            // Q coordinates followed by momenta
  std::vector<MultiIndex> momenta;  // admissible indices, lexicographic
  DifferentialForm theta;
  DifferentialForm omega;
  bool one_nondegenerate = false;

  std::string momentum_name(const MultiIndex& I) const;
};

// Unrestricted model: all C(n,k) momenta. Requires 1 <= k <= n <= 9.
DarbouxModel build_darboux(int n, int k);

// Horizontal model for a fibration Q -> E with the given base and fiber
// coordinate names: momenta p_I only for I with at most r-1 fiber indices.
// Requires 1 <= r <= k; an empty admissible set raises argument_error.
DarbouxModel build_darboux_horizontal(const std::vector<std::string>& base_coords,
                                      const std::vector<std::string>& fiber_coords,
                                      int k, int r);

// Intrinsic tautological evaluation: the momentum coordinates of `point`
// encode a k-form alpha on the base; the value is
// i(rho_* V_k ^ ... ^ rho_* V_1) alpha with rho_* discarding momentum
// components. Agrees exactly with Theta evaluated at `point`.
Rational tautological_eval(const DarbouxModel& model, const QVector& point,
                           const std::vector<QVector>& vectors);

struct TypeConditionsReport {
  int r = 0;
  bool w_one_isotropic = false;
  bool w_involutive = false;
  // Condition (a) for r >= 1: contractions of r-tuples from the supplied
  // lift of epsilon vanish. Vacuously true for r = 0.
  bool contraction_vanishes = false;
  bool dimension_equality = false;
  bool dimension_inequality = false;
  // The horizontal form count below is computed against the supplied lift;
  // when condition (a) fails the count depends on that choice.
  bool count_lift_dependent = false;
  int w_dim = 0;
  int quotient_dim = 0;
  int epsilon_dim = 0;
  long long horizontal_form_count = 0;
  bool overall() const {
    return w_one_isotropic && w_involutive && contraction_vanishes &&
           dimension_equality && dimension_inequality;
  }
};

// Pointwise check of the type-(k,r) structure conditions at `point` for
// Omega closed of degree k >= 2: W 1-isotropic and involutive (brackets
// sampled at the origin, `point` and `extra_samples`), the r-tuple
// contraction condition on the lift of epsilon, and the two dimension
// conditions. W must evaluate to an independent set at `point`.
TypeConditionsReport check_type_conditions(const DifferentialForm& omega,
                                           const std::vector<MultiVectorField>& w_fields,
                                           const Subspace& epsilon_lift, int r,
                                           const QVector& point,
                                           const std::vector<QVector>& extra_samples = {});

// Count of increasing (k-1)-tuples with at most r-1 entries among the last
// epsilon_dim of quotient_dim indices (all tuples when r = 0).
long long horizontal_form_count(int quotient_dim, int epsilon_dim, int k, int r);

}  // namespace msk

#endif
