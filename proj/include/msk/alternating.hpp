#ifndef MSK_ALTERNATING_HPP
#define MSK_ALTERNATING_HPP

#include <span>
#include <string>

#include "msk/linalg.hpp"
#include "msk/multi_index.hpp"
#include "msk/rational.hpp"

namespace msk {

enum class Variance { covariant, contravariant };

std::string to_string(Variance v);

// Pointwise alternating tensor: a k-form (covariant) or k-vector
// (contravariant) over an n-dimensional space, stored as a sparse map from
// increasing multi-indices to rationals. Components only exist while
// degree <= ambient_dim; a tensor of larger degree is identically zero.
class AlternatingTensor {
 public:
  AlternatingTensor(int ambient_dim, int degree, Variance variance);

  static AlternatingTensor basis(int ambient_dim, const MultiIndex& I, Variance v);
  // Degree-1 contravariant tensor with the given components.
  static AlternatingTensor vector(const QVector& components);
  static AlternatingTensor covector(const QVector& components);

  int ambient_dim() const { return n_; }
  int degree() const { return degree_; }
  Variance variance() const { return variance_; }
  const detail::ComponentMap<Rational>& components() const { return comps_; }
  Rational component(const MultiIndex& I) const;
  void add_term(const MultiIndex& I, const Rational& c);
  bool is_zero_tensor() const { return comps_.empty(); }

  AlternatingTensor operator+(const AlternatingTensor& rhs) const;
  AlternatingTensor operator-(const AlternatingTensor& rhs) const;
  AlternatingTensor operator-() const;
  AlternatingTensor scaled(const Rational& c) const;

  // Components in lexicographic basis order, length C(n, degree).
  QVector dense_components() const;

  bool operator==(const AlternatingTensor&) const = default;

 private:
  int n_ = 0;
  int degree_ = 0;
  Variance variance_ = Variance::covariant;
  detail::ComponentMap<Rational> comps_;
};

// Determinant (shuffle) convention, no factorial normalization.
AlternatingTensor wedge(const AlternatingTensor& a, const AlternatingTensor& b);

// i(X) omega; X contravariant of degree m, omega covariant of degree k.
// For m > k the result is the zero 0-form.
AlternatingTensor interior(const AlternatingTensor& X, const AlternatingTensor& omega);

// omega(v_1, ..., v_k), i.e. i(v_k ^ ... ^ v_1) omega.
Rational evaluate(const AlternatingTensor& omega, std::span<const QVector> vectors);

// Matrix of X |-> i(X, omega) from degree-m multivectors to degree-(k-m)
// forms, lexicographic bases on both sides. Requires 1 <= m <= k.
QMatrix flat_matrix(const AlternatingTensor& omega, int m);

// Trivial kernel of the degree-j flat map. Requires 1 <= j <= k-1.
bool is_j_nondegenerate(const AlternatingTensor& omega, int j);

// Pluecker criterion: X = X_1 ^ ... ^ X_m for some vectors iff
// (i(phi) X) ^ X = 0 for every basis covector phi of degree m-1.
bool is_decomposable(const AlternatingTensor& X);

}  // namespace msk

#endif
