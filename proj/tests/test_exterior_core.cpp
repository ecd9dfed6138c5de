#include <doctest.h>

#include "msk/errors.hpp"
#include "oracle.hpp"

using namespace msk;
using msk::testing::DenseTensor;
using msk::testing::Gen;

namespace {

AlternatingTensor basis_form(int n, std::vector<int> idx) {
  return AlternatingTensor::basis(n, MultiIndex(std::move(idx)), Variance::covariant);
}

AlternatingTensor basis_vec(int n, std::vector<int> idx) {
  return AlternatingTensor::basis(n, MultiIndex(std::move(idx)), Variance::contravariant);
}

}  // namespace

TEST_CASE("wedge follows the determinant convention") {
  auto dx1_dx2 = wedge(basis_form(2, {1}), basis_form(2, {2}));
  QVector e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  CHECK(evaluate(dx1_dx2, std::vector<QVector>{e1, e2}) == 1);

  CHECK(wedge(basis_form(2, {1}), basis_form(2, {1})).is_zero_tensor());

  auto sum = basis_form(3, {1}) + basis_form(3, {2});
  auto expected = wedge(basis_form(3, {1}), basis_form(3, {3})) +
                  wedge(basis_form(3, {2}), basis_form(3, {3}));
  CHECK(wedge(sum, basis_form(3, {3})) == expected);
}

TEST_CASE("wedge is graded commutative and associative") {
  Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.integer(2, 5);
    int p = gen.integer(0, 2), q = gen.integer(0, 2);
    auto a = gen.tensor(n, p, Variance::covariant);
    auto b = gen.tensor(n, q, Variance::covariant);
    auto ab = wedge(a, b);
    auto ba = wedge(b, a);
    CHECK(ab == (p * q % 2 == 0 ? ba : -ba));
    auto c = gen.tensor(n, gen.integer(0, 2), Variance::covariant);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("wedge rejects mismatched operands") {
  CHECK_THROWS_AS(wedge(basis_form(2, {1}), basis_form(3, {1})), structural_error);
  CHECK_THROWS_AS(wedge(basis_form(2, {1}), basis_vec(2, {1})), structural_error);
  // Degree overflow is the zero tensor, not an error.
  CHECK(wedge(wedge(basis_form(2, {1}), basis_form(2, {2})), basis_form(2, {1}))
            .is_zero_tensor());
}

TEST_CASE("interior product base cases") {
  CHECK(interior(basis_vec(2, {1}), wedge(basis_form(2, {1}), basis_form(2, {2}))) ==
        basis_form(2, {2}));

  auto dx123 = basis_form(3, {1, 2, 3});
  CHECK(interior(basis_vec(3, {1, 2}), dx123) == -basis_form(3, {3}));

  // m > k gives the zero tensor.
  CHECK(interior(basis_vec(3, {1, 2}), basis_form(3, {1})).is_zero_tensor());
}

TEST_CASE("interior equals the dense antisymmetric oracle") {
  Gen gen(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = gen.integer(2, 6);
    int k = gen.integer(1, std::min(n, 4));
    int m = gen.integer(1, std::min(k, 3));
    auto omega = gen.tensor(n, k, Variance::covariant);
    auto x = gen.tensor(n, m, Variance::contravariant);
    auto sparse = interior(x, omega);
    auto dense = dense_interior(x, DenseTensor::from_sparse(omega));
    CHECK(DenseTensor::from_sparse(sparse) == dense);
  }
}

TEST_CASE("iterated single contractions agree with the decomposable contraction") {
  Gen gen(43);
  for (int trial = 0; trial < 60; ++trial) {
    int n = gen.integer(2, 6);
    int k = gen.integer(2, std::min(n, 4));
    int m = gen.integer(2, k);
    auto omega = gen.tensor(n, k, Variance::covariant);
    std::vector<AlternatingTensor> vectors;
    AlternatingTensor decomposable(n, 0, Variance::contravariant);
    decomposable.add_term(MultiIndex(), 1);
    for (int t = 0; t < m; ++t) {
      auto v = AlternatingTensor::vector(gen.vector(n));
      vectors.push_back(v);
      decomposable = wedge(decomposable, v);
    }
    // Rightmost factor first.
    AlternatingTensor iterated = omega;
    for (int t = m - 1; t >= 0; --t) iterated = interior(vectors[static_cast<std::size_t>(t)], iterated);
    CHECK(interior(decomposable, omega) == iterated);
  }
}

TEST_CASE("flat matrix of the symplectic plane") {
  // Chart order (x, p): Omega = dp ^ dx = -dx^{12}.
  auto omega = -basis_form(2, {1, 2});
  QMatrix f = flat_matrix(omega, 1);
  REQUIRE(f.rows() == 2);
  REQUIRE(f.cols() == 2);
  // Column of d/dx is -dp, column of d/dp is dx.
  CHECK(f.at(0, 0) == 0);
  CHECK(f.at(1, 0) == -1);
  CHECK(f.at(0, 1) == 1);
  CHECK(f.at(1, 1) == 0);
}

TEST_CASE("flat matrix ranks and the zero form") {
  auto volume = basis_form(3, {1, 2, 3});
  QMatrix f = flat_matrix(volume, 1);
  CHECK(f.rows() == 3);
  CHECK(f.cols() == 3);
  CHECK(f.rank() == 3);

  AlternatingTensor zero(3, 3, Variance::covariant);
  CHECK(flat_matrix(zero, 1).is_zero_matrix());

  CHECK_THROWS_AS(flat_matrix(volume, 0), argument_error);
  CHECK_THROWS_AS(flat_matrix(volume, 4), argument_error);
}

TEST_CASE("flat matrix columns implement the interior product") {
  Gen gen(44);
  for (int trial = 0; trial < 50; ++trial) {
    int n = gen.integer(2, 5);
    int k = gen.integer(1, std::min(n, 4));
    int m = gen.integer(1, k);
    auto omega = gen.tensor(n, k, Variance::covariant);
    auto x = gen.tensor(n, m, Variance::contravariant);
    QMatrix f = flat_matrix(omega, m);
    CHECK(f.apply(x.dense_components()) == interior(x, omega).dense_components());
  }
}

TEST_CASE("nondegeneracy checks") {
  CHECK(is_j_nondegenerate(basis_form(3, {1, 2, 3}), 1));
  CHECK_FALSE(is_j_nondegenerate(basis_form(4, {1, 2, 3}), 1));

  // dp1^dx1 + dp2^dx2 on (x1, x2, p1, p2): 1-nondegenerate, not 2-nondegenerate.
  auto symplectic4 = -basis_form(4, {1, 3}) - basis_form(4, {2, 4});
  CHECK(is_j_nondegenerate(symplectic4, 1));
  CHECK_FALSE(is_j_nondegenerate(symplectic4, 2));
  auto kernel_vec = basis_vec(4, {1, 2});
  CHECK(interior(kernel_vec, symplectic4).is_zero_tensor());

  CHECK_THROWS_AS(is_j_nondegenerate(symplectic4, 0), argument_error);
  CHECK_THROWS_AS(is_j_nondegenerate(symplectic4, 2021), argument_error);
}

TEST_CASE("nondegeneracy agrees with brute force over basis multivectors") {
  Gen gen(45);
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.integer(2, 5);
    int k = gen.integer(2, std::min(n, 4));
    int j = gen.integer(1, k - 1);
    auto omega = gen.tensor(n, k, Variance::covariant);
    bool fast = is_j_nondegenerate(omega, j);
    // Brute force: search the kernel by solving over the multivector basis.
    bool trivial_kernel = flat_matrix(omega, j).kernel_basis().empty();
    CHECK(fast == trivial_kernel);
  }
}

TEST_CASE("2-forms on odd-dimensional spaces are always 1-degenerate") {
  Gen gen(46);
  for (int trial = 0; trial < 30; ++trial) {
    int n = gen.integer(1, 2) * 2 + 1;  // 3 or 5
    auto omega = gen.tensor(n, 2, Variance::covariant, 6);
    if (omega.degree() >= 2) CHECK_FALSE(is_j_nondegenerate(omega, 1));
  }
}

TEST_CASE("decomposability via the Pluecker criterion") {
  CHECK(is_decomposable(basis_vec(4, {1, 2})));

  auto mixed = basis_vec(4, {1, 2}) + basis_vec(4, {3, 4});
  CHECK_FALSE(is_decomposable(mixed));
  // The obstruction is X ^ X = 2 e1234, confirmed by the dense wedge oracle.
  auto dense_sq = dense_wedge(DenseTensor::from_sparse(mixed), DenseTensor::from_sparse(mixed));
  AlternatingTensor expected_sq(4, 4, Variance::contravariant);
  expected_sq.add_term(MultiIndex({1, 2, 3, 4}), 2);
  CHECK(dense_sq == DenseTensor::from_sparse(expected_sq));

  Gen gen(47);
  for (int trial = 0; trial < 30; ++trial) {
    int n = gen.integer(2, 5);
    // Top degree is one-dimensional, always decomposable.
    CHECK(is_decomposable(gen.tensor(n, n, Variance::contravariant)));
    // Plain vectors are decomposable.
    CHECK(is_decomposable(gen.tensor(n, 1, Variance::contravariant)));
    // Products of vectors are decomposable by construction.
    auto v = AlternatingTensor::vector(gen.vector(n));
    auto w = AlternatingTensor::vector(gen.vector(n));
    auto vw = wedge(v, w);
    if (!vw.is_zero_tensor()) CHECK(is_decomposable(vw));
  }
}

TEST_CASE("evaluate alternates") {
  Gen gen(48);
  auto omega = gen.tensor(4, 2, Variance::covariant);
  QVector u = gen.vector(4), v = gen.vector(4);
  CHECK(evaluate(omega, std::vector<QVector>{u, v}) ==
        -evaluate(omega, std::vector<QVector>{v, u}));
}
