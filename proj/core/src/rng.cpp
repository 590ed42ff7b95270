#include "sgsvd/rng.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

namespace sgsvd {

namespace {
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * kTwoPowMinus53;
}

double Rng::normal() {
  const double open_uniform = (static_cast<double>(engine_() >> 11) + 0.5) * kTwoPowMinus53;
  return normal_quantile(open_uniform);
}

double Rng::sign() { return uniform() < 0.5 ? -1.0 : 1.0; }

bool Rng::bernoulli(double probability) { return uniform() < probability; }

Index Rng::index(Index n) {
  auto i = static_cast<Index>(uniform() * static_cast<double>(n));
  return i < n ? i : n - 1;
}

double normal_quantile(double probability) {
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * probability);
}

}  // namespace sgsvd
