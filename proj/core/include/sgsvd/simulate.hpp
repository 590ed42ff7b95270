#pragma once

#include <cstdint>
#include <vector>

#include "sgsvd/graph.hpp"
#include "sgsvd/matrix.hpp"
#include "sgsvd/rng.hpp"

namespace sgsvd {

enum class SignMode { Mixed, SameSign };

/// Which singular vector a signal is generated for. Under SameSign the row
/// vector is made nonnegative and the column vector nonpositive.
enum class SignalSide { Row, Column };

struct SimSpec {
  Index n = 100;
  Index p = 100;
  Index support_u = 50;
  Index support_v = 50;
  double gamma = 0.06;
  SignMode sign_mode = SignMode::Mixed;
  double p11 = 0.3;
  double p12 = 0.1;
  std::uint64_t seed = 1;

  void validate() const;
};

struct GroundTruth {
  Vector u_true;
  Vector v_true;
  std::vector<Index> support_u;
  std::vector<Index> support_v;
};

struct Dataset {
  DenseMatrix x;
  GroundTruth truth;
  PriorGraph row_graph;
  PriorGraph col_graph;
};

/// Leading `support` coordinates are random signs (one uniform draw each,
/// drawn under both sign modes), the rest zero, scaled to unit norm.
Vector gen_signal_vector(Index dim, Index support, SignMode mode, SignalSide side, Rng& rng);

/// Planted dense block: pair (i, j), i < j, is an edge with probability p11
/// when both endpoints are below `support`, p12 otherwise. Pairs are visited
/// lexicographically with one uniform draw each.
PriorGraph gen_block_graph(Index dim, Index support, double p11, double p12, Rng& rng);

/// X = u v^T + gamma * E. Stream order from one Rng(seed): u signs, v signs,
/// E row-major, row-graph pairs, column-graph pairs.
Dataset gen_dataset(const SimSpec& spec);

/// from, from + step, ... up to `to` inclusive (with a half-step guard).
std::vector<double> gamma_sweep(double from, double to, double step);

}  // namespace sgsvd
