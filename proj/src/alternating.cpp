#include "msk/alternating.hpp"

#include "msk/errors.hpp"

namespace msk {

std::string to_string(Variance v) {
  return v == Variance::covariant ? "covariant" : "contravariant";
}

AlternatingTensor::AlternatingTensor(int ambient_dim, int degree, Variance variance)
    : n_(ambient_dim), degree_(degree), variance_(variance) {
  if (ambient_dim < 0 || degree < 0)
    throw argument_error("tensor dimensions must be nonnegative");
}

AlternatingTensor AlternatingTensor::basis(int ambient_dim, const MultiIndex& I,
                                           Variance v) {
  AlternatingTensor t(ambient_dim, I.degree(), v);
  t.add_term(I, 1);
  return t;
}

AlternatingTensor AlternatingTensor::vector(const QVector& components) {
  AlternatingTensor t(static_cast<int>(components.size()), 1, Variance::contravariant);
  for (std::size_t i = 0; i < components.size(); ++i)
    t.add_term(MultiIndex::single(static_cast<int>(i) + 1), components[i]);
  return t;
}

AlternatingTensor AlternatingTensor::covector(const QVector& components) {
  AlternatingTensor t(static_cast<int>(components.size()), 1, Variance::covariant);
  for (std::size_t i = 0; i < components.size(); ++i)
    t.add_term(MultiIndex::single(static_cast<int>(i) + 1), components[i]);
  return t;
}

Rational AlternatingTensor::component(const MultiIndex& I) const {
  auto it = comps_.find(I);
  return it == comps_.end() ? Rational(0) : it->second;
}

void AlternatingTensor::add_term(const MultiIndex& I, const Rational& c) {
  if (I.degree() != degree_)
    throw argument_error("component degree does not match tensor degree");
  if (I.max_index() > n_) throw argument_error("component index exceeds ambient dimension");
  detail::add_component(comps_, I, c);
}

AlternatingTensor AlternatingTensor::operator+(const AlternatingTensor& rhs) const {
  if (n_ != rhs.n_ || degree_ != rhs.degree_ || variance_ != rhs.variance_)
    throw structural_error("tensor sum shape mismatch");
  AlternatingTensor out = *this;
  for (const auto& [I, c] : rhs.comps_) detail::add_component(out.comps_, I, c);
  return out;
}

AlternatingTensor AlternatingTensor::operator-(const AlternatingTensor& rhs) const {
  return *this + (-rhs);
}

AlternatingTensor AlternatingTensor::operator-() const { return scaled(Rational(-1)); }

AlternatingTensor AlternatingTensor::scaled(const Rational& c) const {
  AlternatingTensor out(n_, degree_, variance_);
  if (is_zero(c)) return out;
  for (const auto& [I, v] : comps_) out.comps_.emplace(I, c * v);
  return out;
}

QVector AlternatingTensor::dense_components() const {
  auto basis_list = increasing_indices(n_, degree_);
  QVector out(basis_list.size(), Rational(0));
  for (const auto& [I, c] : comps_) out[static_cast<std::size_t>(lex_position(n_, I))] = c;
  return out;
}

AlternatingTensor wedge(const AlternatingTensor& a, const AlternatingTensor& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw structural_error("wedge: ambient dimension mismatch");
  if (a.variance() != b.variance()) throw structural_error("wedge: variance mismatch");
  AlternatingTensor out(a.ambient_dim(), a.degree() + b.degree(), a.variance());
  if (out.degree() > a.ambient_dim()) return out;
  auto comps = detail::wedge_components(a.components(), b.components());
  for (const auto& [I, c] : comps) out.add_term(I, c);
  return out;
}

AlternatingTensor interior(const AlternatingTensor& X, const AlternatingTensor& omega) {
  if (X.ambient_dim() != omega.ambient_dim())
    throw structural_error("interior: ambient dimension mismatch");
  if (X.variance() != Variance::contravariant || omega.variance() != Variance::covariant)
    throw structural_error("interior: expected contravariant X and covariant omega");
  int result_degree = omega.degree() - X.degree();
  if (result_degree < 0)
    return AlternatingTensor(omega.ambient_dim(), 0, Variance::covariant);
  AlternatingTensor out(omega.ambient_dim(), result_degree, Variance::covariant);
  auto comps = detail::interior_components(X.components(), omega.components());
  for (const auto& [I, c] : comps) out.add_term(I, c);
  return out;
}

Rational evaluate(const AlternatingTensor& omega, std::span<const QVector> vectors) {
  if (omega.variance() != Variance::covariant)
    throw structural_error("evaluate: covariant tensor expected");
  if (static_cast<int>(vectors.size()) != omega.degree())
    throw argument_error("evaluate: argument count must equal the degree");
  AlternatingTensor wedge_rev(omega.ambient_dim(), 0, Variance::contravariant);
  wedge_rev.add_term(MultiIndex(), 1);
  for (std::size_t t = vectors.size(); t-- > 0;) {
    if (static_cast<int>(vectors[t].size()) != omega.ambient_dim())
      throw argument_error("evaluate: vector dimension mismatch");
    wedge_rev = wedge(wedge_rev, AlternatingTensor::vector(vectors[t]));
  }
  AlternatingTensor value = interior(wedge_rev, omega);
  return value.component(MultiIndex());
}

QMatrix flat_matrix(const AlternatingTensor& omega, int m) {
  if (omega.variance() != Variance::covariant)
    throw structural_error("flat_matrix: covariant tensor expected");
  int k = omega.degree();
  if (m < 1 || m > k) throw argument_error("flat_matrix: need 1 <= m <= degree");
  int n = omega.ambient_dim();
  auto row_basis = increasing_indices(n, k - m);
  auto col_basis = increasing_indices(n, m);
  QMatrix mat(static_cast<int>(row_basis.size()), static_cast<int>(col_basis.size()));
  for (std::size_t col = 0; col < col_basis.size(); ++col) {
    auto image = interior(AlternatingTensor::basis(n, col_basis[col], Variance::contravariant),
                          omega);
    for (const auto& [I, c] : image.components())
      mat.at(lex_position(n, I), static_cast<int>(col)) = c;
  }
  return mat;
}

bool is_j_nondegenerate(const AlternatingTensor& omega, int j) {
  int k = omega.degree();
  if (j < 1 || j > k - 1) throw argument_error("is_j_nondegenerate: need 1 <= j <= k-1");
  QMatrix f = flat_matrix(omega, j);
  return f.rank() == f.cols();
}

bool is_decomposable(const AlternatingTensor& X) {
  if (X.variance() != Variance::contravariant)
    throw structural_error("is_decomposable: contravariant tensor expected");
  int m = X.degree();
  int n = X.ambient_dim();
  if (m < 1 || m > n) throw argument_error("is_decomposable: need 1 <= degree <= dim");
  for (const MultiIndex& K : increasing_indices(n, m - 1)) {
    // i(dx^K) X by the same contraction algebra with the variances swapped.
    detail::ComponentMap<Rational> phi;
    phi.emplace(K, Rational(1));
    auto vec_comps = detail::interior_components(phi, X.components());
    AlternatingTensor v(n, 1, Variance::contravariant);
    for (const auto& [I, c] : vec_comps) v.add_term(I, c);
    if (!wedge(v, X).is_zero_tensor()) return false;
  }
  return true;
}

}  // namespace msk
