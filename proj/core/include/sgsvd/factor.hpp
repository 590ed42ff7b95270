#pragma once

#include <vector>

#include "sgsvd/matrix.hpp"

namespace sgsvd {

/// One extracted layer d * u * v^T, with unit-norm u (length n) and v
/// (length p) and d >= 0.
struct FactorTriple {
  Vector u;
  Vector v;
  double d = 0.0;
};

Index nonzero_count(const Vector& x);

// Indices of exact nonzeros, ascending.
std::vector<Index> support_of(const Vector& x);

}  // namespace sgsvd
