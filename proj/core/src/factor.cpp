#include "sgsvd/factor.hpp"

namespace sgsvd {

Index nonzero_count(const Vector& x) {
  Index count = 0;
  for (Index i = 0; i < x.size(); ++i) count += x[i] != 0.0 ? 1 : 0;
  return count;
}

std::vector<Index> support_of(const Vector& x) {
  std::vector<Index> idx;
  for (Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) idx.push_back(i);
  }
  return idx;
}

}  // namespace sgsvd
