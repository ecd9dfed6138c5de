#include "msk/invariance.hpp"

#include <map>
#include <utility>

#include "msk/errors.hpp"
#include "msk/linalg.hpp"

namespace msk {

MultiVectorField euler_field(const Chart& chart) {
  MultiVectorField delta(chart, 1);
  for (int v = 0; v < chart.dimension(); ++v)
    delta.add_term(MultiIndex::single(v + 1), Polynomial::variable(chart.dimension(), v));
  return delta;
}

std::vector<MultiVectorField> coordinate_fields(const Chart& chart) {
  std::vector<MultiVectorField> fields;
  for (int v = 0; v < chart.dimension(); ++v) {
    MultiVectorField f(chart, 1);
    f.add_term(MultiIndex::single(v + 1), Polynomial::constant(chart.dimension(), 1));
    fields.push_back(std::move(f));
  }
  return fields;
}

HomogeneityReport check_local_homogeneity(const DifferentialForm& omega,
                                          const MultiVectorField& delta) {
  if (!(omega.chart() == delta.chart()))
    throw structural_error("check_local_homogeneity: chart mismatch");
  if (delta.degree() != 1)
    throw argument_error("check_local_homogeneity: Delta must be a vector field");

  HomogeneityReport report;
  report.factor = Polynomial(omega.chart().dimension());
  DifferentialForm lie = lie_derivative(delta, omega);
  if (omega.is_zero_form()) {
    report.success = lie.is_zero_form();
    return report;
  }
  // If L = f * Omega at all, the quotient against any nonzero component of
  // Omega is f; verifying the product then covers every other component.
  const auto& [ref_index, ref_coeff] = *omega.components().begin();
  auto quotient = lie.component(ref_index).divided_exactly_by(ref_coeff);
  if (!quotient) return report;
  if (!(omega.multiplied(*quotient) == lie)) return report;
  report.success = true;
  report.factor = *quotient;
  return report;
}

SpanRankReport hamiltonian_span_rank(const DifferentialForm& omega,
                                     const std::vector<MultiVectorField>& fields,
                                     const QVector& point) {
  SpanRankReport report;
  std::vector<QVector> rows;
  for (const MultiVectorField& f : fields) {
    HamiltonianCertificate cert = certify(f, omega);
    bool ok = cert.verdict != HamiltonianVerdict::not_closed;
    report.locally_hamiltonian.push_back(ok);
    if (ok) rows.push_back(f.at(point).dense_components());
  }
  report.rank = rows.empty() ? 0 : QMatrix::from_rows(rows).rank();
  report.full = report.rank == omega.chart().dimension();
  return report;
}

std::string to_string(ProbeVerdict v) {
  return v == ProbeVerdict::matches_theorem ? "matches_theorem" : "inconclusive";
}

namespace {

struct UnknownBasis {
  std::vector<MultiIndex> form_indices;
  std::vector<Polynomial::Exponents> monomials;
  int size() const {
    return static_cast<int>(form_indices.size() * monomials.size());
  }
  // Unknown u = (index block, monomial) in row-major order.
  DifferentialForm to_form(const Chart& chart, int p, const QVector& coeffs) const {
    DifferentialForm out(chart, p);
    int u = 0;
    for (const MultiIndex& I : form_indices) {
      Polynomial f(chart.dimension());
      for (const Polynomial::Exponents& e : monomials) {
        if (!is_zero(coeffs[static_cast<std::size_t>(u)]))
          f.add_term(e, coeffs[static_cast<std::size_t>(u)]);
        ++u;
      }
      if (!f.is_zero()) out.add_term(I, f);
    }
    return out;
  }
  std::optional<QVector> to_coeffs(const DifferentialForm& form) const {
    QVector out(static_cast<std::size_t>(size()), Rational(0));
    std::map<MultiIndex, int> block;
    for (std::size_t b = 0; b < form_indices.size(); ++b)
      block[form_indices[b]] = static_cast<int>(b);
    std::map<Polynomial::Exponents, int> mono;
    for (std::size_t m = 0; m < monomials.size(); ++m)
      mono[monomials[m]] = static_cast<int>(m);
    for (const auto& [I, f] : form.components()) {
      auto bit = block.find(I);
      if (bit == block.end()) return std::nullopt;
      for (const auto& [e, c] : f.terms()) {
        auto mit = mono.find(e);
        if (mit == mono.end()) return std::nullopt;
        out[static_cast<std::size_t>(bit->second) * monomials.size() +
            static_cast<std::size_t>(mit->second)] = c;
      }
    }
    return out;
  }
};

}  // namespace

InvarianceProbeResult invariance_probe(const DifferentialForm& omega, int p,
                                       int degree_bound,
                                       const std::vector<MultiVectorField>& vector_fields,
                                       const std::vector<MultiVectorField>& multi_fields) {
  const Chart& chart = omega.chart();
  int n = chart.dimension();
  int k = omega.degree();
  if (p != k && p != k - 1)
    throw argument_error("invariance_probe: target degree must be k or k-1");
  if (degree_bound < omega.coefficient_degree())
    throw argument_error("invariance_probe: degree bound below Omega's coefficient degree");
  if (!is_closed(omega)) throw precondition_error("invariance_probe: Omega is not closed");

  std::vector<const MultiVectorField*> generators;
  auto admit = [&](const std::vector<MultiVectorField>& family, int expected_degree,
                   const char* name) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      const MultiVectorField& g = family[i];
      if (!(g.chart() == chart))
        throw structural_error("invariance_probe: generator chart mismatch");
      if (g.degree() != expected_degree)
        throw argument_error(std::string("invariance_probe: ") + name + " generator #" +
                             std::to_string(i + 1) + " must have degree " +
                             std::to_string(expected_degree));
      if (!is_closed(interior(g, omega)))
        throw precondition_error(std::string("invariance_probe: ") + name +
                                 " generator #" + std::to_string(i + 1) +
                                 " is not locally Hamiltonian");
      generators.push_back(&g);
    }
  };
  admit(vector_fields, 1, "vector_fields");
  if (k - 1 != 1 || &multi_fields != &vector_fields)
    admit(multi_fields, k - 1, "multi_fields");

  UnknownBasis unknowns{increasing_indices(n, p), monomials_up_to_degree(n, degree_bound)};
  int total = unknowns.size();

  // Solution space maintained as explicit coefficient vectors; every
  // generator contributes rows L(g)(basis_j) = 0 and the kernel recombines
  // the basis. The space only shrinks, so once it hits its floor
  // (span{Omega} for p = k, {0} for p = k-1) the remaining generators
  // cannot change it.
  std::vector<QVector> basis_vecs;
  std::vector<DifferentialForm> basis_forms;
  for (int u = 0; u < total; ++u) {
    QVector unit(static_cast<std::size_t>(total), Rational(0));
    unit[static_cast<std::size_t>(u)] = 1;
    basis_forms.push_back(unknowns.to_form(chart, p, unit));
    basis_vecs.push_back(std::move(unit));
  }

  QVector omega_vec;
  if (p == k) {
    auto v = unknowns.to_coeffs(omega);
    if (!v) throw error("invariance_probe: Omega does not fit the unknown basis");
    omega_vec = *v;
  }

  auto at_floor = [&]() {
    if (basis_vecs.empty()) return true;
    if (p == k && basis_vecs.size() == 1) {
      // One-dimensional and containing Omega means exactly span{Omega}.
      QMatrix m = QMatrix::from_rows({basis_vecs[0], omega_vec});
      return m.rank() == 1;
    }
    return false;
  };

  for (const MultiVectorField* g : generators) {
    if (at_floor()) break;
    std::map<std::pair<MultiIndex, Polynomial::Exponents>, QVector> rows;
    for (std::size_t j = 0; j < basis_forms.size(); ++j) {
      DifferentialForm image = lie_derivative(*g, basis_forms[j]);
      for (const auto& [K, f] : image.components())
        for (const auto& [e, c] : f.terms()) {
          auto [it, inserted] = rows.try_emplace(
              {K, e}, QVector(basis_forms.size(), Rational(0)));
          it->second[j] = c;
        }
    }
    if (rows.empty()) continue;
    std::vector<QVector> row_list;
    row_list.reserve(rows.size());
    for (auto& [key, row] : rows) row_list.push_back(std::move(row));
    std::vector<QVector> combos = QMatrix::from_rows(row_list).kernel_basis();
    std::vector<QVector> new_vecs;
    std::vector<DifferentialForm> new_forms;
    for (const QVector& y : combos) {
      QVector vec(static_cast<std::size_t>(total), Rational(0));
      DifferentialForm form(chart, p);
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (is_zero(y[j])) continue;
        for (int u = 0; u < total; ++u)
          vec[static_cast<std::size_t>(u)] += y[j] * basis_vecs[j][static_cast<std::size_t>(u)];
        form = form + basis_forms[j].scaled(y[j]);
      }
      new_vecs.push_back(std::move(vec));
      new_forms.push_back(std::move(form));
    }
    basis_vecs = std::move(new_vecs);
    basis_forms = std::move(new_forms);
  }

  InvarianceProbeResult result;
  result.target_degree = p;
  result.degree_bound = degree_bound;
  result.solution_dim = static_cast<int>(basis_vecs.size());
  result.solution_basis = basis_forms;
  if (p == k) {
    if (basis_vecs.empty()) {
      result.omega_in_solution_space = false;
    } else {
      QMatrix span = QMatrix::from_rows(basis_vecs);
      result.omega_in_solution_space =
          span.vstacked(QMatrix::from_rows({omega_vec})).rank() == span.rank();
    }
    if (!result.omega_in_solution_space)
      throw error("invariance_probe: Omega left the solution space; a generator is not "
                  "locally Hamiltonian after all");
    result.verdict = result.solution_dim == 1 ? ProbeVerdict::matches_theorem
                                              : ProbeVerdict::inconclusive;
  } else {
    result.verdict = result.solution_dim == 0 ? ProbeVerdict::matches_theorem
                                              : ProbeVerdict::inconclusive;
  }
  return result;
}

GeneratorFamily default_generators(const DifferentialForm& omega, int max_monomial_degree) {
  const Chart& chart = omega.chart();
  int n = chart.dimension();
  int k = omega.degree();
  if (k < 2) throw argument_error("default_generators: form degree >= 2 required");
  if (!omega.has_constant_coefficients())
    throw argument_error("default_generators: Omega must have constant coefficients");

  GeneratorFamily family;
  family.vector_fields = coordinate_fields(chart);

  auto monomials = monomials_up_to_degree(n, max_monomial_degree);

  // Hamiltonian vector fields of monomial (k-2)-forms, where solvable.
  for (const MultiIndex& K : increasing_indices(n, k - 2))
    for (const Polynomial::Exponents& e : monomials) {
      DifferentialForm zeta(chart, k - 2);
      zeta.add_term(K, Polynomial::monomial(n, e, 1));
      auto sol = solve_hamiltonian_field(zeta, omega, 1, max_monomial_degree);
      if (sol.solvable && sol.particular && !sol.particular->is_zero_field())
        family.vector_fields.push_back(*sol.particular);
    }

  // Hamiltonian (k-1)-fields of monomial functions.
  for (const Polynomial::Exponents& e : monomials) {
    DifferentialForm h(chart, 0);
    h.add_term(MultiIndex(), Polynomial::monomial(n, e, 1));
    auto sol = solve_hamiltonian_field(h, omega, k - 1, max_monomial_degree);
    if (sol.solvable && sol.particular && !sol.particular->is_zero_field())
      family.multi_fields.push_back(*sol.particular);
  }

  // Kernel fields of the degree-(k-1) flat map (monomial coefficients);
  // their contraction with Omega vanishes identically.
  {
    DifferentialForm zero_zeta(chart, 0);
    auto sol = solve_hamiltonian_field(zero_zeta, omega, k - 1, max_monomial_degree);
    for (const MultiVectorField& h : sol.homogeneous_basis)
      family.multi_fields.push_back(h);
  }

  // Constant decomposable wedges of coordinate fields.
  for (const MultiIndex& J : increasing_indices(n, k - 1)) {
    MultiVectorField f(chart, k - 1);
    f.add_term(J, Polynomial::constant(n, 1));
    family.multi_fields.push_back(std::move(f));
  }

  return family;
}

}  // namespace msk
