#ifndef MSK_HAMILTONIAN_HPP
#define MSK_HAMILTONIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "msk/forms.hpp"

namespace msk {

enum class HamiltonianVerdict { not_closed, locally_hamiltonian, hamiltonian };

std::string to_string(HamiltonianVerdict v);

// Certificate for a multivector field X against a closed Omega: the
// contraction beta = i(X)Omega, whether it is closed, and (on this
// star-shaped polynomial chart, where closed implies exact) a primitive
// zeta with d(zeta) = beta. locally_hamiltonian and hamiltonian coincide
// here; the verdict keeps the stronger label and the flag below records
// the weaker one separately.
struct HamiltonianCertificate {
  MultiVectorField field;
  int degree = 0;
  DifferentialForm contraction;  // beta = i(X)Omega
  HamiltonianVerdict verdict = HamiltonianVerdict::not_closed;
  bool locally_hamiltonian = false;
  std::optional<DifferentialForm> hamiltonian_form;  // zeta, d(zeta) = beta
};

// Requires d(Omega) = 0 (precondition_error) and degree(X) < degree(Omega)
// (argument_error).
HamiltonianCertificate certify(const MultiVectorField& X, const DifferentialForm& omega);

// Solution of i(X)Omega = d(zeta) for constant-coefficient closed Omega:
// a particular X with polynomial components of degree <= degree_bound plus
// a basis of {X : i(X)Omega = 0, deg <= degree_bound}. Unsolvable
// right-hand sides yield solvable = false (not an exception).
struct HamiltonianFieldSolution {
  bool solvable = false;
  std::optional<MultiVectorField> particular;
  std::vector<MultiVectorField> homogeneous_basis;
  std::string failure;  // empty when solvable
};

HamiltonianFieldSolution solve_hamiltonian_field(const DifferentialForm& zeta,
                                                 const DifferentialForm& omega, int m,
                                                 int degree_bound);

}  // namespace msk

#endif
