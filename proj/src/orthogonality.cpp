#include "msk/orthogonality.hpp"

#include "msk/errors.hpp"
#include "msk/multi_index.hpp"

namespace msk {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
  std::vector<std::vector<int>> out;
  for (const MultiIndex& I : increasing_indices(n, r)) {
    std::vector<int> s;
    for (int i : I.indices()) s.push_back(i - 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Subspace::Subspace(int ambient_dim) : n_(ambient_dim), basis_(0, ambient_dim) {
  if (ambient_dim < 0) throw argument_error("ambient dimension must be nonnegative");
}

Subspace Subspace::from_rows(int ambient_dim, const std::vector<QVector>& rows) {
  for (const QVector& r : rows)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw argument_error("subspace row length must equal the ambient dimension");
  Subspace s(ambient_dim);
  if (rows.empty()) return s;
  std::vector<int> pivots;
  QMatrix r = QMatrix::from_rows(rows).rref(&pivots);
  QMatrix basis(static_cast<int>(pivots.size()), ambient_dim);
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < ambient_dim; ++j) basis.at(i, j) = r.at(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::whole(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMatrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const QVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw argument_error("vector dimension mismatch");
  QMatrix stacked = basis_.vstacked(QMatrix::from_rows({v}));
  return stacked.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw argument_error("ambient dimension mismatch");
  if (other.dim() == 0) return true;
  return basis_.vstacked(other.basis_).rank() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.n_ != n_) throw argument_error("ambient dimension mismatch");
  std::vector<QVector> rows = basis_.row_vectors();
  for (const QVector& r : other.basis_.row_vectors()) rows.push_back(r);
  return from_rows(n_, rows);
}

int Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - sum(other).dim();
}

Subspace orth_complement(const Subspace& w, const AlternatingTensor& omega, int r) {
  if (omega.variance() != Variance::covariant)
    throw structural_error("orth_complement: covariant omega expected");
  int n = omega.ambient_dim();
  if (w.ambient_dim() != n)
    throw structural_error("orth_complement: ambient dimension mismatch");
  int k = omega.degree();
  if (r < 1 || r > k - 1) throw argument_error("orth_complement: need 1 <= r <= k-1");

  // Wedges over duplicate vectors vanish, so r-subsets of the basis carry
  // every constraint.
  std::vector<QVector> constraint_rows;
  auto basis_rows = w.basis().row_vectors();
  for (const auto& subset : subsets_of_size(w.dim(), r)) {
    AlternatingTensor wedge_w(n, 0, Variance::contravariant);
    wedge_w.add_term(MultiIndex(), 1);
    for (int idx : subset)
      wedge_w = wedge(wedge_w, AlternatingTensor::vector(basis_rows[static_cast<std::size_t>(idx)]));
    // Linear map v -> i(v ^ wedge_w) omega, one constraint row per
    // component of the resulting (k-r-1)-form.
    std::vector<AlternatingTensor> images;
    for (int col = 0; col < n; ++col) {
      AlternatingTensor v(n, 1, Variance::contravariant);
      v.add_term(MultiIndex::single(col + 1), 1);
      images.push_back(interior(wedge(v, wedge_w), omega));
    }
    auto rows_basis = increasing_indices(n, k - r - 1);
    for (const MultiIndex& I : rows_basis) {
      QVector row(static_cast<std::size_t>(n), Rational(0));
      bool nonzero = false;
      for (int col = 0; col < n; ++col) {
        row[static_cast<std::size_t>(col)] = images[static_cast<std::size_t>(col)].component(I);
        nonzero = nonzero || !is_zero(row[static_cast<std::size_t>(col)]);
      }
      if (nonzero) constraint_rows.push_back(std::move(row));
    }
  }
  if (constraint_rows.empty()) return Subspace::whole(n);
  QMatrix constraints = QMatrix::from_rows(constraint_rows);
  return Subspace::from_rows(n, constraints.kernel_basis());
}

ClassificationReport classify(const Subspace& w, const AlternatingTensor& omega, int r) {
  ClassificationReport report;
  report.r = r;
  report.complement = orth_complement(w, omega, r);
  report.isotropic = report.complement.contains(w);
  report.coisotropic = w.contains(report.complement);
  report.lagrangian = report.isotropic && report.coisotropic;
  if (r == omega.degree() - 1) {
    report.multisymplectic_evaluated = true;
    report.multisymplectic = w.intersection_dim(report.complement) == 0;
  }
  return report;
}

bool is_maximal_isotropic(const Subspace& w, const AlternatingTensor& omega, int r) {
  Subspace complement = orth_complement(w, omega, r);
  if (!complement.contains(w))
    throw precondition_error("is_maximal_isotropic: W is not " + std::to_string(r) +
                             "-isotropic");
  // A vector v extends W to a larger r-isotropic subspace iff v lies in
  // W^{perp,r} (duplicate slots vanish by antisymmetry), so maximality is
  // the absence of complement vectors outside W.
  return w.contains(complement);
}

}  // namespace msk
