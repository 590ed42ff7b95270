#pragma once

#include <cstdint>
#include <random>

#include "sgsvd/matrix.hpp"

namespace sgsvd {

/// Portable seeded generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; every derived draw below consumes
/// exactly one engine output so streams can be reproduced elsewhere:
///   uniform()  = (x >> 11) * 2^-53                      in [0, 1)
///   normal()   = Phi^-1(((x >> 11) + 0.5) * 2^-53)      inverse-CDF transform
///   sign()     = uniform() < 0.5 ? -1 : +1
///   bernoulli(q) = uniform() < q
///   index(n)   = floor(uniform() * n)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  double sign();
  bool bernoulli(double probability);
  Index index(Index n);

 private:
  std::mt19937_64 engine_;
};

/// Standard normal quantile function.
double normal_quantile(double probability);

}  // namespace sgsvd
