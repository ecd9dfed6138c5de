#include "msk/linalg.hpp"

#include "msk/errors.hpp"

namespace msk {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw argument_error("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw argument_error("ragged rows in matrix construction");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(int i) const {
  QVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<QVector> QMatrix::row_vectors() const {
  std::vector<QVector> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rows;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw structural_error("matrix product dimension mismatch");
  QMatrix p(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (is_zero(at(i, k))) continue;
      for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return p;
}

QVector QMatrix::apply(const QVector& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw structural_error("matrix-vector dimension mismatch");
  QVector y(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!is_zero(at(i, j))) y[i] += at(i, j) * x[j];
  return y;
}

QMatrix QMatrix::vstacked(const QMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw structural_error("vstack column mismatch");
  QMatrix m(rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

QMatrix QMatrix::rref(std::vector<int>* pivot_cols) const {
  QMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < rows_; ++i)
      if (!is_zero(m.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    Rational inv = 1 / m.at(pivot_row, col);
    for (int j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pivot_row || is_zero(m.at(i, col))) continue;
      Rational factor = m.at(i, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

int QMatrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

std::vector<QVector> QMatrix::kernel_basis() const {
  std::vector<int> pivots;
  QMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -r.at(static_cast<int>(pi), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_)
    throw structural_error("solve: rhs length mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  std::vector<int> pivots;
  QMatrix r = aug.rref(&pivots);
  for (int c : pivots)
    if (c == cols_) return std::nullopt;
  QVector x(cols_, Rational(0));
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = r.at(static_cast<int>(pi), cols_);
  return x;
}

bool QMatrix::is_zero_matrix() const {
  for (const Rational& q : a_)
    if (!msk::is_zero(q)) return false;
  return true;
}

}  // namespace msk
