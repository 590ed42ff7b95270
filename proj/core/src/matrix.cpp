#include "sgsvd/matrix.hpp"

#include <string>

#include "sgsvd/errors.hpp"

namespace sgsvd {

DenseMatrix::DenseMatrix(RowMajorMatrix values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw DimensionError("matrix must have at least one row and one column");
  }
  if (!values_.allFinite()) {
    throw ConfigError("matrix contains non-finite entries");
  }
}

namespace {

RowMajorMatrix from_nested(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  const auto p = n == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  RowMajorMatrix m(n, p);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != p) {
      throw DimensionError("ragged matrix literal at row " + std::to_string(i));
    }
    Index j = 0;
    for (double value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

}  // namespace

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : DenseMatrix(from_nested(rows)) {}

DenseMatrix DenseMatrix::zeros(Index rows, Index cols) {
  return DenseMatrix(RowMajorMatrix::Zero(rows, cols));
}

Vector DenseMatrix::multiply(const Vector& v) const {
  if (v.size() != cols()) {
    throw DimensionError("X v: vector length " + std::to_string(v.size()) +
                         " != cols " + std::to_string(cols()));
  }
  return values_ * v;
}

Vector DenseMatrix::multiply_transpose(const Vector& u) const {
  if (u.size() != rows()) {
    throw DimensionError("X^T u: vector length " + std::to_string(u.size()) +
                         " != rows " + std::to_string(rows()));
  }
  return values_.transpose() * u;
}

Vector DenseMatrix::gram_multiply(const Vector& w) const {
  if (w.size() != cols()) {
    throw DimensionError("X^T X w: vector length " + std::to_string(w.size()) +
                         " != cols " + std::to_string(cols()));
  }
  Vector out = Vector::Zero(cols());
  for (Index i = 0; i < rows(); ++i) {
    const auto row = values_.row(i);
    out += row.dot(w) * row.transpose();
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  return DenseMatrix(RowMajorMatrix(values_ * factor));
}

}  // namespace sgsvd
