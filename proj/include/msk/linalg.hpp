#ifndef MSK_LINALG_HPP
#define MSK_LINALG_HPP

#include <optional>
#include <vector>

#include "msk/rational.hpp"

namespace msk {

// Dense matrix over exact rationals. Small dimensions only; elimination is
// plain Gauss-Jordan with first-nonzero pivoting, which is deterministic.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  QVector row(int i) const;
  std::vector<QVector> row_vectors() const;

  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& rhs) const;
  QVector apply(const QVector& x) const;
  QMatrix vstacked(const QMatrix& below) const;

  // Reduced row echelon form; pivot columns (increasing) reported on request.
  QMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
  int rank() const;

  // Basis of {x : Ax = 0}, one vector per free column in increasing column
  // order, with the free variable set to 1.
  std::vector<QVector> kernel_basis() const;

  // One particular solution of Ax = b, or nullopt when inconsistent.
  std::optional<QVector> solve(const QVector& rhs) const;

  bool is_zero_matrix() const;
  bool operator==(const QMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace msk

#endif
