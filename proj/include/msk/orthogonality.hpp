#ifndef MSK_ORTHOGONALITY_HPP
#define MSK_ORTHOGONALITY_HPP

#include <vector>

#include "msk/alternating.hpp"
#include "msk/linalg.hpp"

namespace msk {

// Linear subspace of a tangent space, stored as the reduced row echelon
// basis of its span. Equal subspaces always hold identical matrices.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // the zero subspace
  static Subspace from_rows(int ambient_dim, const std::vector<QVector>& rows);
  static Subspace whole(int ambient_dim);

  int ambient_dim() const { return n_; }
  int dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  int intersection_dim(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  int n_;
  QMatrix basis_;
};

struct ClassificationReport {
  int r = 0;
  bool isotropic = false;
  bool coisotropic = false;
  bool lagrangian = false;
  // Only evaluated when r == degree(omega) - 1.
  bool multisymplectic_evaluated = false;
  bool multisymplectic = false;
  Subspace complement{0};
};

// {v : i(v ^ w_1 ^ ... ^ w_r) omega = 0 for all w_i in W}, computed from the
// stacked constraints over r-subsets of W's basis. When dim W < r there are
// no constraints and the whole space is returned.
Subspace orth_complement(const Subspace& w, const AlternatingTensor& omega, int r);

ClassificationReport classify(const Subspace& w, const AlternatingTensor& omega, int r);

// Extension test: an r-isotropic W is maximal iff no vector of W^{perp,r}
// lies outside W. Raises precondition_error when W is not r-isotropic.
bool is_maximal_isotropic(const Subspace& w, const AlternatingTensor& omega, int r);

}  // namespace msk

#endif
