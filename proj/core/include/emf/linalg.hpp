#pragma once

#include <vector>

#include "emf/scalar.hpp"

namespace emf {

/// Dense matrix over Q(zeta_m) with exact Gaussian elimination.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(size_t rows, size_t cols, const FieldPtr& field);

  static ScalarMatrix identity(size_t n, const FieldPtr& field);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const Scalar& c) const;
  bool operator==(const ScalarMatrix& o) const;
  bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

  ScalarMatrix transpose() const;
  ScalarMatrix inverse() const;  // throws computation_error if singular
  Scalar determinant() const;
  Scalar trace() const;
  size_t rank() const;

  /// Basis of the right kernel, as column vectors.
  std::vector<std::vector<Scalar>> kernel() const;

  bool is_identity() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  FieldPtr field_;
  std::vector<Scalar> data_;
};

/// Row space comparison helper: true iff every row of `sub` lies in the row
/// span of `space` (over the common field).
bool rows_contained_in_span(const ScalarMatrix& sub, const ScalarMatrix& space);

}  // namespace emf
