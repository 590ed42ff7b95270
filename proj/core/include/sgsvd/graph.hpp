#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sgsvd/matrix.hpp"

namespace sgsvd {

/// Which Laplacian the graph penalty uses: L = D - A, or the degree
/// normalized D^(-1/2) L D^(-1/2) evaluated through edge weights
/// 1/sqrt(d_i d_j) with unit diagonal (zero for isolated vertices).
enum class LaplacianMode { Raw, Normalized };

struct Edge {
  Index first;
  Index second;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph with binary weights, stored as CSR adjacency.
/// Each edge is kept once in canonical (min, max) order; no dense Laplacian
/// is ever formed.
class PriorGraph {
 public:
  PriorGraph() = default;
  PriorGraph(Index vertex_count, std::vector<Edge> edges);

  static PriorGraph empty(Index vertex_count) { return PriorGraph(vertex_count, {}); }

  Index vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Index degree(Index k) const { return offsets_[k + 1] - offsets_[k]; }
  std::span<const Index> neighbors(Index k) const {
    return {adjacency_.data() + offsets_[k], adjacency_.data() + offsets_[k + 1]};
  }
  // 1/sqrt(d_k), or 0 for isolated vertices.
  double inv_sqrt_degree(Index k) const { return inv_sqrt_degree_[k]; }

  bool has_edge(Index i, Index j) const;

 private:
  Index vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Index> offsets_{0};
  std::vector<Index> adjacency_;
  std::vector<double> inv_sqrt_degree_;
};

namespace detail {

inline double neighbor_sum_unchecked(const PriorGraph& g, const double* x, Index k,
                                     LaplacianMode mode) {
  double sum = 0.0;
  if (mode == LaplacianMode::Raw) {
    for (Index j : g.neighbors(k)) sum += x[j];
  } else {
    for (Index j : g.neighbors(k)) sum += g.inv_sqrt_degree(j) * x[j];
    sum *= g.inv_sqrt_degree(k);
  }
  return sum;
}

inline double normalized_degree_unchecked(const PriorGraph& g, Index k, LaplacianMode mode) {
  const auto deg = g.degree(k);
  if (mode == LaplacianMode::Raw) return static_cast<double>(deg);
  return deg > 0 ? 1.0 : 0.0;
}

}  // namespace detail

/// Weighted sum of x over the neighbours of k (A_k x, or its normalized form).
double neighbor_sum(const PriorGraph& g, const Vector& x, Index k,
                    LaplacianMode mode = LaplacianMode::Raw);

/// Diagonal entry of the chosen Laplacian at k.
double normalized_degree(const PriorGraph& g, Index k, LaplacianMode mode = LaplacianMode::Raw);

/// L x in O(|E| + n).
Vector laplacian_apply(const PriorGraph& g, const Vector& x,
                       LaplacianMode mode = LaplacianMode::Raw);

}  // namespace sgsvd
