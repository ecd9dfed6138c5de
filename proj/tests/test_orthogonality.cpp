#include <doctest.h>

#include "msk/errors.hpp"
#include "msk/orthogonality.hpp"
#include "oracle.hpp"

using namespace msk;
using msk::testing::Gen;

namespace {

// dp1^dx1 + dp2^dx2 on (x1, x2, p1, p2).
AlternatingTensor symplectic4() {
  AlternatingTensor w(4, 2, Variance::covariant);
  w.add_term(MultiIndex({1, 3}), -1);
  w.add_term(MultiIndex({2, 4}), -1);
  return w;
}

AlternatingTensor volume3() {
  return AlternatingTensor::basis(3, MultiIndex({1, 2, 3}), Variance::covariant);
}

QVector unit(int n, int i) {
  QVector v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

// Direct check of r-isotropy from the definition, for the brute-force side
// of the maximality test.
bool isotropic_directly(const Subspace& w, const AlternatingTensor& omega, int r) {
  return orth_complement(w, omega, r).contains(w);
}

}  // namespace

TEST_CASE("subspace representation is canonical") {
  Gen gen(51);
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.integer(2, 6);
    int d = gen.integer(1, n);
    std::vector<QVector> rows;
    for (int i = 0; i < d; ++i) rows.push_back(gen.vector(n));
    Subspace a = Subspace::from_rows(n, rows);
    // Random invertible recombination spans the same space.
    std::vector<QVector> mixed;
    for (int i = 0; i < d; ++i) {
      QVector v(static_cast<std::size_t>(n), Rational(0));
      for (int j = 0; j < d; ++j) {
        Rational c = gen.rational();
        for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] += c * rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      }
      mixed.push_back(std::move(v));
    }
    for (const QVector& r : rows) mixed.push_back(r);  // ensure equal span
    Subspace b = Subspace::from_rows(n, mixed);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
  }
}

TEST_CASE("orthogonal complement on the symplectic space") {
  Subspace w = Subspace::from_rows(4, {unit(4, 1)});  // span{d/dx1}
  Subspace complement = orth_complement(w, symplectic4(), 1);
  Subspace expected = Subspace::from_rows(4, {unit(4, 1), unit(4, 2), unit(4, 4)});
  CHECK(complement == expected);
}

TEST_CASE("complement of the whole space under a volume form") {
  Subspace whole = Subspace::whole(3);
  Subspace complement = orth_complement(whole, volume3(), 2);
  CHECK(complement.dim() == 0);
}

TEST_CASE("vacuous constraints give the whole space") {
  Subspace w = Subspace::from_rows(4, {unit(4, 1)});
  CHECK(orth_complement(Subspace(4), symplectic4(), 1) == Subspace::whole(4));
  // dim W = 1 < r = 2 for a degree-3 form.
  AlternatingTensor cubic(4, 3, Variance::covariant);
  cubic.add_term(MultiIndex({1, 2, 3}), 1);
  CHECK(orth_complement(w, cubic, 2) == Subspace::whole(4));
  CHECK_THROWS_AS(orth_complement(w, symplectic4(), 2), argument_error);
  CHECK_THROWS_AS(orth_complement(w, symplectic4(), 0), argument_error);
}

TEST_CASE("classification of characteristic subspaces") {
  // Lagrangian plane of the symplectic space.
  Subspace lagrangian = Subspace::from_rows(4, {unit(4, 1), unit(4, 2)});
  ClassificationReport rep = classify(lagrangian, symplectic4(), 1);
  CHECK(rep.isotropic);
  CHECK(rep.coisotropic);
  CHECK(rep.lagrangian);
  CHECK(rep.multisymplectic_evaluated);  // r = k-1 = 1
  CHECK_FALSE(rep.multisymplectic);

  // The whole space is coisotropic for every admissible r.
  AlternatingTensor cubic(4, 3, Variance::covariant);
  cubic.add_term(MultiIndex({1, 2, 3}), 1);
  cubic.add_term(MultiIndex({1, 2, 4}), 1);
  for (int r = 1; r <= 2; ++r) CHECK(classify(Subspace::whole(4), cubic, r).coisotropic);

  // Lines are 1-Lagrangian for the volume form on R^3.
  ClassificationReport line = classify(Subspace::from_rows(3, {unit(3, 1)}), volume3(), 1);
  CHECK(line.lagrangian);
}

TEST_CASE("lagrangian flag is the conjunction of the inclusions") {
  Gen gen(52);
  for (int trial = 0; trial < 60; ++trial) {
    int n = gen.integer(2, 6);
    int k = gen.integer(2, std::min(n, 4));
    auto omega = gen.tensor(n, k, Variance::covariant);
    int r = gen.integer(1, k - 1);
    std::vector<QVector> rows;
    for (int i = 0, d = gen.integer(0, n); i < d; ++i) rows.push_back(gen.vector(n));
    Subspace w = Subspace::from_rows(n, rows);
    ClassificationReport rep = classify(w, omega, r);
    CHECK(rep.lagrangian == (rep.isotropic && rep.coisotropic));
    CHECK(rep.lagrangian == (w == rep.complement));
  }
}

TEST_CASE("maximal isotropic subspaces") {
  Subspace lagrangian = Subspace::from_rows(4, {unit(4, 1), unit(4, 2)});
  CHECK(is_maximal_isotropic(lagrangian, symplectic4(), 1));

  Subspace small = Subspace::from_rows(4, {unit(4, 1)});
  CHECK_FALSE(is_maximal_isotropic(small, symplectic4(), 1));
  // It extends inside its complement, e.g. by d/dx2.
  CHECK(orth_complement(small, symplectic4(), 1).contains(unit(4, 2)));

  // {0} always extends when the degree leaves room for a single vector.
  CHECK_FALSE(is_maximal_isotropic(Subspace(4), symplectic4(), 1));

  // Non-isotropic input is a precondition violation.
  Subspace bad = Subspace::from_rows(4, {unit(4, 1), unit(4, 3)});
  CHECK_THROWS_AS(is_maximal_isotropic(bad, symplectic4(), 1), precondition_error);
}

TEST_CASE("monotonicity of complements in r") {
  Gen gen(53);
  for (int trial = 0; trial < 60; ++trial) {
    int n = gen.integer(3, 6);
    int k = gen.integer(3, std::min(n, 4));
    auto omega = gen.tensor(n, k, Variance::covariant);
    int r = gen.integer(1, k - 2);
    std::vector<QVector> rows;
    for (int i = 0, d = gen.integer(1, n); i < d; ++i) rows.push_back(gen.vector(n));
    Subspace w = Subspace::from_rows(n, rows);
    Subspace lower = orth_complement(w, omega, r);
    Subspace upper = orth_complement(w, omega, r + 1);
    CHECK(upper.contains(lower));

    ClassificationReport rep_r = classify(w, omega, r);
    ClassificationReport rep_r1 = classify(w, omega, r + 1);
    if (rep_r.isotropic) CHECK(rep_r1.isotropic);
    if (rep_r1.coisotropic) CHECK(rep_r.coisotropic);
  }
}

TEST_CASE("complements reverse inclusions") {
  Gen gen(54);
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.integer(2, 6);
    int k = gen.integer(2, std::min(n, 4));
    auto omega = gen.tensor(n, k, Variance::covariant);
    int r = gen.integer(1, k - 1);
    std::vector<QVector> rows;
    for (int i = 0, d = gen.integer(0, n - 1); i < d; ++i) rows.push_back(gen.vector(n));
    Subspace w1 = Subspace::from_rows(n, rows);
    rows.push_back(gen.vector(n));
    Subspace w2 = Subspace::from_rows(n, rows);  // w1 inside w2
    CHECK(orth_complement(w1, omega, r).contains(orth_complement(w2, omega, r)));
  }
}

TEST_CASE("extension-test maximality agrees with the lagrangian condition") {
  Gen gen(55);
  int instances = 0;
  while (instances < 60) {
    int n = gen.integer(2, 6);
    int k = gen.integer(2, std::min(n, 4));
    auto omega = gen.tensor(n, k, Variance::covariant, 5);
    int r = gen.integer(1, k - 1);
    // Grow a random isotropic subspace greedily inside its own complement.
    Subspace w(n);
    for (int step = 0, target = gen.integer(0, n); step < target; ++step) {
      Subspace complement = orth_complement(w, omega, r);
      if (complement.dim() == w.dim()) break;
      QVector candidate(static_cast<std::size_t>(n), Rational(0));
      for (const QVector& row : complement.basis().row_vectors()) {
        Rational c = gen.rational(3, 2);
        for (int t = 0; t < n; ++t) candidate[static_cast<std::size_t>(t)] += c * row[static_cast<std::size_t>(t)];
      }
      std::vector<QVector> rows = w.basis().row_vectors();
      rows.push_back(candidate);
      Subspace grown = Subspace::from_rows(n, rows);
      if (grown.dim() > w.dim() && isotropic_directly(grown, omega, r)) w = grown;
    }
    if (!isotropic_directly(w, omega, r)) continue;
    ++instances;
    bool maximal = is_maximal_isotropic(w, omega, r);
    Subspace complement = orth_complement(w, omega, r);
    CHECK(maximal == (w == complement));
    // Brute-force: maximality means no complement basis vector extends W.
    bool extension_found = false;
    for (const QVector& v : complement.basis().row_vectors()) {
      if (w.contains(v)) continue;
      std::vector<QVector> rows = w.basis().row_vectors();
      rows.push_back(v);
      if (isotropic_directly(Subspace::from_rows(n, rows), omega, r)) extension_found = true;
    }
    CHECK(maximal == !extension_found);
  }
}
