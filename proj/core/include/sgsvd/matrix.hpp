#pragma once

#include <initializer_list>

#include <Eigen/Dense>

namespace sgsvd {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense n x p data matrix, row-major. Construction rejects empty shapes and
/// non-finite entries; the object is immutable afterwards.
class DenseMatrix {
 public:
  explicit DenseMatrix(RowMajorMatrix values);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix zeros(Index rows, Index cols);

  Index rows() const noexcept { return values_.rows(); }
  Index cols() const noexcept { return values_.cols(); }
  double operator()(Index i, Index j) const { return values_(i, j); }
  const RowMajorMatrix& values() const noexcept { return values_; }

  // X v, length rows().
  Vector multiply(const Vector& v) const;
  // X^T u, length cols().
  Vector multiply_transpose(const Vector& u) const;
  // X^T (X w) in one pass over the rows.
  Vector gram_multiply(const Vector& w) const;

  double frobenius_norm() const { return values_.norm(); }
  DenseMatrix scaled(double factor) const;

  bool operator==(const DenseMatrix& other) const {
    return rows() == other.rows() && cols() == other.cols() &&
           values_ == other.values_;
  }

 private:
  RowMajorMatrix values_;
};

}  // namespace sgsvd
