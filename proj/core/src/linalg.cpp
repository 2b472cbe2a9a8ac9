#include "emf/linalg.hpp"

#include <algorithm>

namespace emf {

ScalarMatrix::ScalarMatrix(size_t rows, size_t cols, const FieldPtr& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix ScalarMatrix::identity(size_t n, const FieldPtr& field) {
  ScalarMatrix m(n, n, field);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  ScalarMatrix r(rows_, cols_, field_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  ScalarMatrix r(rows_, cols_, field_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw computation_error("matrix dimension mismatch");
  ScalarMatrix r(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const Scalar& c) const {
  ScalarMatrix r(rows_, cols_, field_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar ScalarMatrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw computation_error("inverse of non-square matrix");
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(rows_, field_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t piv = col;
    while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) throw computation_error("singular matrix");
    if (piv != col)
      for (size_t j = 0; j < cols_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Scalar d = a.at(col, col).inverse();
    for (size_t j = 0; j < cols_; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (size_t i = 0; i < rows_; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Scalar c = a.at(i, col);
      for (size_t j = 0; j < cols_; ++j) {
        a.at(i, j) -= c * a.at(col, j);
        inv.at(i, j) -= c * inv.at(col, j);
      }
    }
  }
  return inv;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw computation_error("determinant of non-square matrix");
  ScalarMatrix a = *this;
  Scalar det = Scalar::one(field_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t piv = col;
    while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) return Scalar::zero(field_);
    if (piv != col) {
      for (size_t j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Scalar d = a.at(col, col).inverse();
    for (size_t i = col + 1; i < rows_; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Scalar c = a.at(i, col) * d;
      for (size_t j = col; j < cols_; ++j) a.at(i, j) -= c * a.at(col, j);
    }
  }
  return det;
}

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> echelon(ScalarMatrix& a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar d = a.at(row, col).inverse();
    for (size_t j = col; j < a.cols(); ++j) a.at(row, j) *= d;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar c = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= c * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t ScalarMatrix::rank() const {
  ScalarMatrix a = *this;
  return echelon(a).size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
  ScalarMatrix a = *this;
  std::vector<size_t> pivots = echelon(a);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool rows_contained_in_span(const ScalarMatrix& sub, const ScalarMatrix& space) {
  if (sub.rows() == 0) return true;
  ScalarMatrix stacked(space.rows() + sub.rows(), space.cols(), space.field());
  for (size_t i = 0; i < space.rows(); ++i)
    for (size_t j = 0; j < space.cols(); ++j) stacked.at(i, j) = space.at(i, j);
  for (size_t i = 0; i < sub.rows(); ++i)
    for (size_t j = 0; j < sub.cols(); ++j) stacked.at(space.rows() + i, j) = sub.at(i, j);
  return stacked.rank() == space.rank();
}

}  // namespace emf
