#include "msk/hamiltonian.hpp"

#include "msk/errors.hpp"
#include "msk/linalg.hpp"

namespace msk {

std::string to_string(HamiltonianVerdict v) {
  switch (v) {
    case HamiltonianVerdict::not_closed: return "not_closed";
    case HamiltonianVerdict::locally_hamiltonian: return "locally_hamiltonian";
    case HamiltonianVerdict::hamiltonian: return "hamiltonian";
  }
  return "?";
}

HamiltonianCertificate certify(const MultiVectorField& X, const DifferentialForm& omega) {
  if (!(X.chart() == omega.chart())) throw structural_error("certify: chart mismatch");
  if (X.degree() >= omega.degree())
    throw argument_error("certify: field degree must be below the form degree");
  if (!is_closed(omega)) throw precondition_error("certify: Omega is not closed");

  HamiltonianCertificate cert;
  cert.field = X;
  cert.degree = X.degree();
  cert.contraction = interior(X, omega);
  if (!is_closed(cert.contraction)) {
    cert.verdict = HamiltonianVerdict::not_closed;
    return cert;
  }
  cert.locally_hamiltonian = true;
  // beta has degree k - m >= 1 and the chart is star-shaped, so closed
  // means exact and the homotopy operator produces a primitive.
  cert.hamiltonian_form = homotopy_inverse_d(cert.contraction);
  cert.verdict = HamiltonianVerdict::hamiltonian;
  return cert;
}

HamiltonianFieldSolution solve_hamiltonian_field(const DifferentialForm& zeta,
                                                 const DifferentialForm& omega, int m,
                                                 int degree_bound) {
  const Chart& chart = omega.chart();
  if (!(zeta.chart() == chart)) throw structural_error("solve_hamiltonian_field: chart mismatch");
  int k = omega.degree();
  if (m < 1 || m >= k)
    throw argument_error("solve_hamiltonian_field: need 1 <= m < degree(Omega)");
  if (!omega.has_constant_coefficients())
    throw argument_error("solve_hamiltonian_field: Omega must have constant coefficients");
  if (!is_closed(omega))
    throw precondition_error("solve_hamiltonian_field: Omega is not closed");
  if (zeta.degree() != k - m - 1)
    throw argument_error("solve_hamiltonian_field: zeta must have degree k-m-1");
  if (degree_bound < 0) throw argument_error("solve_hamiltonian_field: negative degree bound");

  DifferentialForm rhs = exterior_derivative(zeta);
  if (rhs.coefficient_degree() > degree_bound)
    throw argument_error("solve_hamiltonian_field: d(zeta) exceeds the degree bound");

  int n = chart.dimension();
  QMatrix flat = flat_matrix(omega.at(chart.origin()), m);
  auto col_basis = increasing_indices(n, m);
  auto row_basis = increasing_indices(n, k - m);

  HamiltonianFieldSolution sol;

  // Per-monomial solves: constant Omega maps x^a e_J to x^a i(e_J)Omega,
  // so the system splits by coefficient monomial.
  std::map<Polynomial::Exponents, QVector> rhs_by_monomial;
  for (const auto& [I, f] : rhs.components()) {
    int row = lex_position(n, I);
    for (const auto& [e, c] : f.terms()) {
      auto [it, inserted] = rhs_by_monomial.try_emplace(
          e, QVector(row_basis.size(), Rational(0)));
      it->second[static_cast<std::size_t>(row)] = c;
    }
  }

  MultiVectorField particular(chart, m);
  for (const auto& [e, b] : rhs_by_monomial) {
    auto x = flat.solve(b);
    if (!x) {
      sol.solvable = false;
      sol.failure = "no solution: a component of d(zeta) lies outside the image of the flat map";
      return sol;
    }
    for (std::size_t col = 0; col < col_basis.size(); ++col)
      if (!is_zero((*x)[col]))
        particular.add_term(col_basis[col], Polynomial::monomial(n, e, (*x)[col]));
  }
  sol.solvable = true;
  sol.particular = particular;

  for (const QVector& kvec : flat.kernel_basis())
    for (const Polynomial::Exponents& e : monomials_up_to_degree(n, degree_bound)) {
      MultiVectorField h(chart, m);
      for (std::size_t col = 0; col < col_basis.size(); ++col)
        if (!is_zero(kvec[col]))
          h.add_term(col_basis[col], Polynomial::monomial(n, e, kvec[col]));
      sol.homogeneous_basis.push_back(std::move(h));
    }
  return sol;
}

}  // namespace msk
