#include "sgsvd/simulate.hpp"

#include <cmath>
#include <string>

#include "sgsvd/errors.hpp"
#include "sgsvd/factor.hpp"

namespace sgsvd {

namespace {

bool is_probability(double q) { return q >= 0.0 && q <= 1.0; }

}  // namespace

void SimSpec::validate() const {
  if (n < 1 || p < 1) throw ConfigError("dimensions must be positive");
  if (support_u < 1 || support_u > n) {
    throw ConfigError("support_u = " + std::to_string(support_u) + " must lie in [1, n = " +
                      std::to_string(n) + "]");
  }
  if (support_v < 1 || support_v > p) {
    throw ConfigError("support_v = " + std::to_string(support_v) + " must lie in [1, p = " +
                      std::to_string(p) + "]");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be >= 0");
  if (!is_probability(p11) || !is_probability(p12)) {
    throw ConfigError("edge probabilities must lie in [0, 1]");
  }
}

Vector gen_signal_vector(Index dim, Index support, SignMode mode, SignalSide side, Rng& rng) {
  if (support < 1 || support > dim) {
    throw ConfigError("support " + std::to_string(support) + " exceeds dimension " +
                      std::to_string(dim));
  }
  Vector v = Vector::Zero(dim);
  for (Index i = 0; i < support; ++i) v[i] = rng.sign();
  if (mode == SignMode::SameSign) {
    v = v.cwiseAbs();
    if (side == SignalSide::Column) v = -v;
  }
  return v / std::sqrt(static_cast<double>(support));
}

PriorGraph gen_block_graph(Index dim, Index support, double p11, double p12, Rng& rng) {
  if (!is_probability(p11) || !is_probability(p12)) {
    throw ConfigError("edge probabilities must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      const double q = (i < support && j < support) ? p11 : p12;
      if (rng.bernoulli(q)) edges.push_back({i, j});
    }
  }
  return PriorGraph(dim, std::move(edges));
}

Dataset gen_dataset(const SimSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Vector u = gen_signal_vector(spec.n, spec.support_u, spec.sign_mode, SignalSide::Row, rng);
  Vector v = gen_signal_vector(spec.p, spec.support_v, spec.sign_mode, SignalSide::Column, rng);

  RowMajorMatrix x = u * v.transpose();
  for (Index i = 0; i < spec.n; ++i) {
    for (Index j = 0; j < spec.p; ++j) {
      const double noise = rng.normal();
      if (spec.gamma != 0.0) x(i, j) += spec.gamma * noise;
    }
  }

  PriorGraph rows = gen_block_graph(spec.n, spec.support_u, spec.p11, spec.p12, rng);
  PriorGraph cols = gen_block_graph(spec.p, spec.support_v, spec.p11, spec.p12, rng);

  GroundTruth truth{u, v, support_of(u), support_of(v)};
  return Dataset{DenseMatrix(std::move(x)), std::move(truth), std::move(rows), std::move(cols)};
}

std::vector<double> gamma_sweep(double from, double to, double step) {
  if (!(step > 0.0) || to < from) throw ConfigError("gamma sweep needs step > 0 and to >= from");
  std::vector<double> values;
  for (long i = 0;; ++i) {
    const double g = from + static_cast<double>(i) * step;
    if (g > to + 0.5 * step) break;
    values.push_back(g);
  }
  return values;
}

}  // namespace sgsvd
