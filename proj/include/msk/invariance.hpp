#ifndef MSK_INVARIANCE_HPP
#define MSK_INVARIANCE_HPP

#include <string>
#include <vector>

#include "msk/forms.hpp"
#include "msk/hamiltonian.hpp"

namespace msk {

// The dilation field x^i d/dx^i over all chart coordinates.
MultiVectorField euler_field(const Chart& chart);

// One constant coordinate field per chart coordinate.
std::vector<MultiVectorField> coordinate_fields(const Chart& chart);

struct HomogeneityReport {
  bool success = false;
  Polynomial factor;  // f with L(Delta)Omega = f * Omega, valid on success
};

// Componentwise exact division of L(Delta)Omega by Omega; succeeds iff one
// polynomial quotient f is consistent across all components.
HomogeneityReport check_local_homogeneity(const DifferentialForm& omega,
                                          const MultiVectorField& delta);

struct SpanRankReport {
  std::vector<bool> locally_hamiltonian;  // per input field
  int rank = 0;
  bool full = false;
};

// Rank at `point` of the input vector fields that certify against Omega
// with a closed contraction; the rest are flagged and excluded.
SpanRankReport hamiltonian_span_rank(const DifferentialForm& omega,
                                     const std::vector<MultiVectorField>& fields,
                                     const QVector& point);

enum class ProbeVerdict { matches_theorem, inconclusive };

std::string to_string(ProbeVerdict v);

struct InvarianceProbeResult {
  int target_degree = 0;  // p
  int degree_bound = 0;   // d
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  int solution_dim = 0;
  std::vector<DifferentialForm> solution_basis;
  bool omega_in_solution_space = false;  // meaningful for p = k
};

// Finite probe of the invariance theorem: assembles L(X_i)alpha = 0 over
// all degree-p forms alpha with coefficients of total degree <= degree_bound
// and returns a basis of the solution space. For p = k the verdict is
// matches_theorem iff the space is exactly span{Omega}; for p = k-1 iff it
// is {0}. A strictly larger space is inconclusive, never a refutation:
// finitely many generators bound the theorem from one side only.
//
// Every generator must be locally Hamiltonian for Omega (precondition_error
// naming the offender otherwise); vector_fields have degree 1 and
// multi_fields degree k-1; degree_bound must cover Omega's coefficients.
InvarianceProbeResult invariance_probe(const DifferentialForm& omega, int p,
                                       int degree_bound,
                                       const std::vector<MultiVectorField>& vector_fields,
                                       const std::vector<MultiVectorField>& multi_fields);

struct GeneratorFamily {
  std::vector<MultiVectorField> vector_fields;  // degree 1
  std::vector<MultiVectorField> multi_fields;   // degree k-1
};

// Default generator recipe for a constant-coefficient closed Omega:
//  - vector fields: the coordinate fields, plus particular solutions of
//    i(X)Omega = d(zeta) over monomial (k-2)-forms zeta with coefficient
//    degree <= max_monomial_degree, where solvable;
//  - (k-1)-fields: particular solutions of i(X)Omega = d(h) over monomial
//    functions h of degree <= max_monomial_degree, the kernel fields of the
//    degree-(k-1) flat map with monomial coefficients, and the constant
//    decomposable wedges of coordinate fields.
// Coordinate fields come first; the probe shrinks fastest that way.
GeneratorFamily default_generators(const DifferentialForm& omega,
                                   int max_monomial_degree = 2);

}  // namespace msk

#endif
