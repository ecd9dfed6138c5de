#include "msk/canonical_models.hpp"

#include <algorithm>

#include "msk/errors.hpp"

namespace msk {

namespace {

DarbouxModel build_model(const Chart& base_chart, int k, int r,
                         const std::vector<MultiIndex>& momenta) {
  DarbouxModel model;
  model.base_dim = base_chart.dimension();
  model.form_degree = k;
  model.horizontal_r = r;
  model.base_chart = base_chart;
  model.momenta = momenta;

  std::vector<std::string> coords = base_chart.coords();
  for (const MultiIndex& I : momenta) coords.push_back("p_" + I.concat_digits());
  model.chart = Chart(std::move(coords));
  int dim = model.chart.dimension();
  int n = model.base_dim;

  model.theta = DifferentialForm(model.chart, k);
  for (std::size_t m = 0; m < momenta.size(); ++m)
    model.theta.add_term(momenta[m],
                         Polynomial::variable(dim, n + static_cast<int>(m)));

  model.omega = exterior_derivative(model.theta);

  // Omega must equal sum dp_I ^ dx^I; rebuild it independently and compare.
  DifferentialForm expected(model.chart, k + 1);
  for (std::size_t m = 0; m < momenta.size(); ++m) {
    auto merged = wedge_sign(MultiIndex::single(n + static_cast<int>(m) + 1), momenta[m]);
    expected.add_term(merged->second,
                      Polynomial::constant(dim, merged->first));
  }
  if (!(model.omega == expected))
    throw error("darboux model: d(Theta) disagrees with sum dp_I ^ dx^I");

  if (!is_closed(model.omega)) throw error("darboux model: Omega is not closed");

  // Constant coefficients, so the kernel at the origin decides
  // 1-nondegeneracy everywhere on the chart.
  model.one_nondegenerate = is_j_nondegenerate(model.omega.at(model.chart.origin()), 1);
  return model;
}

}  // namespace

std::string DarbouxModel::momentum_name(const MultiIndex& I) const {
  return "p_" + I.concat_digits();
}

DarbouxModel build_darboux(int n, int k) {
  if (n < 1 || n > 9) throw argument_error("build_darboux: need 1 <= n <= 9");
  if (k < 1 || k > n) throw argument_error("build_darboux: need 1 <= k <= n");
  std::vector<std::string> base;
  for (int i = 1; i <= n; ++i) base.push_back("x" + std::to_string(i));
  DarbouxModel model = build_model(Chart(std::move(base)), k, 0, increasing_indices(n, k));
  if (!model.one_nondegenerate)
    throw error("build_darboux: unrestricted model failed the nondegeneracy check");
  return model;
}

DarbouxModel build_darboux_horizontal(const std::vector<std::string>& base_coords,
                                      const std::vector<std::string>& fiber_coords,
                                      int k, int r) {
  Chart base_chart(base_coords, fiber_coords);
  int n = base_chart.dimension();
  if (n < 1 || n > 9) throw argument_error("build_darboux_horizontal: need 1 <= dim Q <= 9");
  if (k < 1 || k > n) throw argument_error("build_darboux_horizontal: need 1 <= k <= dim Q");
  if (r < 1 || r > k) throw argument_error("build_darboux_horizontal: need 1 <= r <= k");
  int first_fiber = base_chart.base_count() + 1;  // 1-based
  std::vector<MultiIndex> momenta;
  for (const MultiIndex& I : increasing_indices(n, k)) {
    int fiber_entries = 0;
    for (int i : I.indices())
      if (i >= first_fiber) ++fiber_entries;
    if (fiber_entries <= r - 1) momenta.push_back(I);
  }
  if (momenta.empty())
    throw argument_error("build_darboux_horizontal: no admissible momentum index for k=" +
                         std::to_string(k) + ", r=" + std::to_string(r) + ", base=" +
                         std::to_string(base_chart.base_count()) + ", fiber=" +
                         std::to_string(base_chart.fiber_count()));
  return build_model(base_chart, k, r, momenta);
}

Rational tautological_eval(const DarbouxModel& model, const QVector& point,
                           const std::vector<QVector>& vectors) {
  int dim = model.chart.dimension();
  int n = model.base_dim;
  int k = model.form_degree;
  if (static_cast<int>(point.size()) != dim)
    throw argument_error("tautological_eval: point dimension mismatch");
  if (static_cast<int>(vectors.size()) != k)
    throw argument_error("tautological_eval: expected " + std::to_string(k) + " vectors");
  for (const QVector& v : vectors)
    if (static_cast<int>(v.size()) != dim)
      throw argument_error("tautological_eval: vector dimension mismatch");

  // The k-form on the base encoded by the momentum coordinates of `point`.
  AlternatingTensor alpha(n, k, Variance::covariant);
  for (std::size_t m = 0; m < model.momenta.size(); ++m)
    alpha.add_term(model.momenta[m], point[static_cast<std::size_t>(n) + m]);

  // rho_* V_k ^ ... ^ rho_* V_1, base components only, reversed order as in
  // the defining display.
  AlternatingTensor pushed(n, 0, Variance::contravariant);
  pushed.add_term(MultiIndex(), 1);
  for (std::size_t t = vectors.size(); t-- > 0;) {
    QVector base_part(vectors[t].begin(), vectors[t].begin() + n);
    pushed = wedge(pushed, AlternatingTensor::vector(base_part));
  }
  return interior(pushed, alpha).component(MultiIndex());
}

long long horizontal_form_count(int quotient_dim, int epsilon_dim, int k, int r) {
  if (r == 0) return binomial(quotient_dim, k - 1);
  long long count = 0;
  for (int j = 0; j <= std::min(r - 1, epsilon_dim); ++j)
    count += binomial(epsilon_dim, j) * binomial(quotient_dim - epsilon_dim, k - 1 - j);
  return count;
}

TypeConditionsReport check_type_conditions(const DifferentialForm& omega,
                                           const std::vector<MultiVectorField>& w_fields,
                                           const Subspace& epsilon_lift, int r,
                                           const QVector& point,
                                           const std::vector<QVector>& extra_samples) {
  const Chart& chart = omega.chart();
  int n = chart.dimension();
  int k = omega.degree();
  if (k < 2) throw argument_error("check_type_conditions: form degree >= 2 required");
  if (r < 0 || r > k - 1) throw argument_error("check_type_conditions: need 0 <= r <= k-1");
  if (epsilon_lift.ambient_dim() != n)
    throw structural_error("check_type_conditions: epsilon ambient dimension mismatch");
  if (!is_closed(omega))
    throw precondition_error("check_type_conditions: Omega is not closed");

  std::vector<QVector> w_rows;
  for (const MultiVectorField& f : w_fields) {
    if (f.degree() != 1)
      throw argument_error("check_type_conditions: W must be spanned by vector fields");
    w_rows.push_back(f.at(point).dense_components());
  }
  Subspace w_at_point = Subspace::from_rows(n, w_rows);
  if (w_at_point.dim() != static_cast<int>(w_fields.size()))
    throw precondition_error("check_type_conditions: spanning set is dependent at the point");

  TypeConditionsReport report;
  report.r = r;
  report.w_dim = w_at_point.dim();
  report.quotient_dim = n - w_at_point.dim();
  report.epsilon_dim = w_at_point.sum(epsilon_lift).dim() - w_at_point.dim();

  AlternatingTensor omega_p = omega.at(point);
  report.w_one_isotropic =
      w_at_point.dim() == 0 ||
      orth_complement(w_at_point, omega_p, 1).contains(w_at_point);

  report.w_involutive = true;
  std::vector<QVector> samples = {chart.origin(), point};
  samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());
  for (std::size_t i = 0; i < w_fields.size() && report.w_involutive; ++i)
    for (std::size_t j = i + 1; j < w_fields.size() && report.w_involutive; ++j) {
      MultiVectorField bracket = lie_bracket(w_fields[i], w_fields[j]);
      for (const QVector& q : samples) {
        std::vector<QVector> rows;
        for (const MultiVectorField& f : w_fields) rows.push_back(f.at(q).dense_components());
        Subspace span_q = Subspace::from_rows(n, rows);
        if (!span_q.contains(bracket.at(q).dense_components())) {
          report.w_involutive = false;
          break;
        }
      }
    }

  report.contraction_vanishes = true;
  if (r >= 1) {
    auto basis_rows = epsilon_lift.basis().row_vectors();
    int e_rows = static_cast<int>(basis_rows.size());
    for (const MultiIndex& S : increasing_indices(e_rows, r)) {
      AlternatingTensor w(n, 0, Variance::contravariant);
      w.add_term(MultiIndex(), 1);
      for (int pos : S.indices())
        w = wedge(w, AlternatingTensor::vector(basis_rows[static_cast<std::size_t>(pos - 1)]));
      if (!interior(w, omega_p).is_zero_tensor()) {
        report.contraction_vanishes = false;
        break;
      }
    }
  }
  report.count_lift_dependent = r >= 1 && !report.contraction_vanishes;

  report.horizontal_form_count =
      horizontal_form_count(report.quotient_dim, report.epsilon_dim, k, r);
  report.dimension_equality = report.w_dim == report.horizontal_form_count;
  report.dimension_inequality = report.quotient_dim > k - 1;
  return report;
}

}  // namespace msk
