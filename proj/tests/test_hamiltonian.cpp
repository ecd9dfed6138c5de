#include <doctest.h>

#include "msk/canonical_models.hpp"
#include "msk/errors.hpp"
#include "msk/hamiltonian.hpp"
#include "msk/invariance.hpp"
#include "oracle.hpp"

using namespace msk;
using msk::testing::Gen;

namespace {

const Chart kPlane{std::vector<std::string>{"x", "p"}};

DifferentialForm plane_omega() {
  DifferentialForm omega(kPlane, 2);
  omega.add_term(MultiIndex({1, 2}), Polynomial::constant(2, -1));  // dp ^ dx
  return omega;
}

MultiVectorField coordinate_field(const Chart& chart, int coord) {
  MultiVectorField f(chart, 1);
  f.add_term(MultiIndex::single(coord), Polynomial::constant(chart.dimension(), 1));
  return f;
}

}  // namespace

TEST_CASE("certify a coordinate field on the symplectic plane") {
  HamiltonianCertificate cert = certify(coordinate_field(kPlane, 1), plane_omega());
  CHECK(cert.verdict == HamiltonianVerdict::hamiltonian);
  CHECK(cert.locally_hamiltonian);
  // beta = i(d/dx)(dp ^ dx) = -dp.
  DifferentialForm beta(kPlane, 1);
  beta.add_term(MultiIndex::single(2), Polynomial::constant(2, -1));
  CHECK(cert.contraction == beta);
  REQUIRE(cert.hamiltonian_form.has_value());
  CHECK(exterior_derivative(*cert.hamiltonian_form) == beta);
  // The homotopy primitive is exactly -p here.
  DifferentialForm minus_p(kPlane, 0);
  minus_p.add_term(MultiIndex(), -Polynomial::variable(2, 1));
  CHECK(*cert.hamiltonian_form == minus_p);
}

TEST_CASE("the Euler field is not locally Hamiltonian") {
  MultiVectorField euler = euler_field(kPlane);
  HamiltonianCertificate cert = certify(euler, plane_omega());
  CHECK(cert.verdict == HamiltonianVerdict::not_closed);
  CHECK_FALSE(cert.locally_hamiltonian);
  CHECK_FALSE(cert.hamiltonian_form.has_value());
  // d i(X)Omega = 2 dp ^ dx.
  CHECK(exterior_derivative(cert.contraction) == plane_omega().scaled(2));
}

TEST_CASE("certify a decomposable 2-field against a degree-3 form") {
  Chart chart(std::vector<std::string>{"x1", "x2", "p"});
  // Omega = dp ^ dx1 ^ dx2 = dx^{123} with coordinates (x1, x2, p).
  DifferentialForm omega(chart, 3);
  omega.add_term(MultiIndex({1, 2, 3}), Polynomial::constant(3, 1));
  MultiVectorField x12(chart, 2);
  x12.add_term(MultiIndex({1, 2}), Polynomial::constant(3, 1));
  HamiltonianCertificate cert = certify(x12, omega);
  CHECK(cert.verdict == HamiltonianVerdict::hamiltonian);
  DifferentialForm minus_dp(chart, 1);
  minus_dp.add_term(MultiIndex::single(3), Polynomial::constant(3, -1));
  CHECK(cert.contraction == minus_dp);
  DifferentialForm minus_p(chart, 0);
  minus_p.add_term(MultiIndex(), -Polynomial::variable(3, 2));
  CHECK(*cert.hamiltonian_form == minus_p);
}

TEST_CASE("certify validates its preconditions") {
  DifferentialForm not_closed(kPlane, 1);
  not_closed.add_term(MultiIndex::single(1), Polynomial::variable(2, 1));  // p dx
  CHECK_THROWS_AS(certify(coordinate_field(kPlane, 1), not_closed), precondition_error);
  MultiVectorField x12(kPlane, 2);
  x12.add_term(MultiIndex({1, 2}), Polynomial::constant(2, 1));
  CHECK_THROWS_AS(certify(x12, plane_omega()), argument_error);
}

TEST_CASE("solve the defining equation on the plane") {
  DifferentialForm zeta(kPlane, 0);
  zeta.add_term(MultiIndex(), Polynomial::variable(2, 1));  // zeta = p
  auto sol = solve_hamiltonian_field(zeta, plane_omega(), 1, 2);
  REQUIRE(sol.solvable);
  MultiVectorField expected(kPlane, 1);
  expected.add_term(MultiIndex::single(1), Polynomial::constant(2, -1));  // -d/dx
  CHECK(*sol.particular == expected);
  CHECK(sol.homogeneous_basis.empty());
  CHECK(interior(*sol.particular, plane_omega()) == exterior_derivative(zeta));
}

TEST_CASE("zero right-hand side isolates the kernel") {
  DifferentialForm zero(kPlane, 0);
  auto sol = solve_hamiltonian_field(zero, plane_omega(), 1, 1);
  REQUIRE(sol.solvable);
  CHECK(sol.particular->is_zero_field());
  // Symplectic flat is injective: no homogeneous solutions at all.
  CHECK(sol.homogeneous_basis.empty());

  // A degree-3 form on R^4 has a nontrivial degree-1 kernel.
  Chart chart(std::vector<std::string>{"a", "b", "c", "d"});
  DifferentialForm cubic(chart, 3);
  cubic.add_term(MultiIndex({1, 2, 3}), Polynomial::constant(4, 1));
  DifferentialForm zero4(chart, 1);
  auto sol4 = solve_hamiltonian_field(zero4, cubic, 1, 0);
  REQUIRE(sol4.solvable);
  REQUIRE(sol4.homogeneous_basis.size() == 1);
  CHECK(interior(sol4.homogeneous_basis[0], cubic).is_zero_form());
}

TEST_CASE("solve inverts the certify example") {
  Chart chart(std::vector<std::string>{"x1", "x2", "p"});
  DifferentialForm omega(chart, 3);
  omega.add_term(MultiIndex({1, 2, 3}), Polynomial::constant(3, 1));
  DifferentialForm zeta(chart, 0);
  zeta.add_term(MultiIndex(), -Polynomial::variable(3, 2));  // -p
  auto sol = solve_hamiltonian_field(zeta, omega, 2, 1);
  REQUIRE(sol.solvable);
  MultiVectorField expected(chart, 2);
  expected.add_term(MultiIndex({1, 2}), Polynomial::constant(3, 1));
  CHECK(*sol.particular == expected);
  CHECK(sol.homogeneous_basis.empty());
}

TEST_CASE("unsolvable right-hand sides are reported, not thrown") {
  Chart chart(std::vector<std::string>{"a", "b", "c", "d"});
  DifferentialForm omega(chart, 3);
  omega.add_term(MultiIndex({1, 2, 3}), Polynomial::constant(4, 1));
  // d(a db^dd)... choose zeta = a dd: d(zeta) = da^dd, outside the image of
  // the flat map (every image form lives in the span of dx^{IJ} with I,J <= 3).
  DifferentialForm zeta(chart, 1);
  zeta.add_term(MultiIndex::single(4), Polynomial::variable(4, 0));
  auto sol = solve_hamiltonian_field(zeta, omega, 1, 1);
  CHECK_FALSE(sol.solvable);
  CHECK_FALSE(sol.failure.empty());
  CHECK_FALSE(sol.particular.has_value());
}

TEST_CASE("solve validates its arguments") {
  DifferentialForm variable_omega(kPlane, 2);
  variable_omega.add_term(MultiIndex({1, 2}), Polynomial::variable(2, 0));
  DifferentialForm zeta(kPlane, 0);
  CHECK_THROWS_AS(solve_hamiltonian_field(zeta, variable_omega, 1, 1), argument_error);
  CHECK_THROWS_AS(solve_hamiltonian_field(zeta, plane_omega(), 2, 1), argument_error);
  DifferentialForm big(kPlane, 0);
  big.add_term(MultiIndex(), Polynomial::monomial(2, {5, 0}, 1));
  CHECK_THROWS_AS(solve_hamiltonian_field(big, plane_omega(), 1, 1), argument_error);
}

TEST_CASE("round trip: solve then certify reproduces zeta up to a closed difference") {
  Gen gen(71);
  int done = 0;
  while (done < 30) {
    int n = gen.integer(1, 3);
    int k = gen.integer(1, std::min(3, n));
    DarbouxModel model = build_darboux(n, k);
    int dim = model.chart.dimension();
    int kk = model.omega.degree();
    int m = gen.integer(1, kk - 1);
    // A constant multivector guarantees a closed contraction; its homotopy
    // primitive is a solvable right-hand side by construction.
    MultiVectorField x0 = gen.field(model.chart, m, 0, 1);
    DifferentialForm beta = interior(x0, model.omega);
    if (beta.is_zero_form()) continue;
    DifferentialForm zeta = homotopy_inverse_d(beta);
    auto sol = solve_hamiltonian_field(zeta, model.omega, m, 2);
    REQUIRE(sol.solvable);
    HamiltonianCertificate cert = certify(*sol.particular, model.omega);
    CHECK(cert.verdict == HamiltonianVerdict::hamiltonian);
    CHECK(exterior_derivative(*cert.hamiltonian_form - zeta).is_zero_form());
    CHECK(cert.contraction == beta);
    ++done;
    (void)dim;
  }
}

TEST_CASE("certify is linear in the field") {
  Gen gen(72);
  DarbouxModel model = build_darboux(2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = gen.field(model.chart, 1, 2);
    auto y = gen.field(model.chart, 1, 2);
    Rational a = gen.rational(), b = gen.rational();
    auto combined = interior(x.scaled(a) + y.scaled(b), model.omega);
    CHECK(combined == interior(x, model.omega).scaled(a) + interior(y, model.omega).scaled(b));
  }
}

TEST_CASE("homogeneous corrections leave the contraction unchanged") {
  Chart chart(std::vector<std::string>{"a", "b", "c", "d"});
  DifferentialForm omega(chart, 3);
  omega.add_term(MultiIndex({1, 2, 3}), Polynomial::constant(4, 1));
  DifferentialForm zero(chart, 1);
  auto hom = solve_hamiltonian_field(zero, omega, 1, 1);
  Gen gen(73);
  auto x = gen.field(chart, 1, 1);
  DifferentialForm before = interior(x, omega);
  for (const MultiVectorField& h : hom.homogeneous_basis)
    CHECK(interior(x + h, omega) == before);
}
