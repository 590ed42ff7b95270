#include "sgsvd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgsvd/errors.hpp"

namespace sgsvd {

PriorGraph::PriorGraph(Index vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw DimensionError("negative vertex count");
  for (auto& e : edges_) {
    if (e.first < 0 || e.second < 0 || e.first >= vertex_count_ ||
        e.second >= vertex_count_) {
      throw DimensionError("edge (" + std::to_string(e.first) + ", " +
                           std::to_string(e.second) + ") outside vertex range [0, " +
                           std::to_string(vertex_count_) + ")");
    }
    if (e.first == e.second) {
      throw ConfigError("self-loop at vertex " + std::to_string(e.first));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ConfigError("duplicate edge (" + std::to_string(dup->first) + ", " +
                      std::to_string(dup->second) + ")");
  }

  std::vector<Index> degrees(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& e : edges_) {
    ++degrees[e.first];
    ++degrees[e.second];
  }
  offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
  for (Index k = 0; k < vertex_count_; ++k) offsets_[k + 1] = offsets_[k] + degrees[k];
  adjacency_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<Index> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) adjacency_[cursor[e.first]++] = e.second;
  for (const auto& e : edges_) adjacency_[cursor[e.second]++] = e.first;
  for (Index k = 0; k < vertex_count_; ++k) {
    std::sort(adjacency_.begin() + offsets_[k], adjacency_.begin() + offsets_[k + 1]);
  }

  inv_sqrt_degree_.resize(static_cast<std::size_t>(vertex_count_));
  for (Index k = 0; k < vertex_count_; ++k) {
    inv_sqrt_degree_[k] = degrees[k] > 0 ? 1.0 / std::sqrt(static_cast<double>(degrees[k])) : 0.0;
  }
}

bool PriorGraph::has_edge(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= vertex_count_ || j >= vertex_count_) return false;
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

namespace {

void check_index(const PriorGraph& g, Index k) {
  if (k < 0 || k >= g.vertex_count()) {
    throw DimensionError("vertex index " + std::to_string(k) + " outside [0, " +
                         std::to_string(g.vertex_count()) + ")");
  }
}

void check_length(const PriorGraph& g, const Vector& x) {
  if (x.size() != g.vertex_count()) {
    throw DimensionError("vector length " + std::to_string(x.size()) +
                         " != vertex count " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

double neighbor_sum(const PriorGraph& g, const Vector& x, Index k, LaplacianMode mode) {
  check_index(g, k);
  check_length(g, x);
  return detail::neighbor_sum_unchecked(g, x.data(), k, mode);
}

double normalized_degree(const PriorGraph& g, Index k, LaplacianMode mode) {
  check_index(g, k);
  return detail::normalized_degree_unchecked(g, k, mode);
}

Vector laplacian_apply(const PriorGraph& g, const Vector& x, LaplacianMode mode) {
  check_length(g, x);
  Vector out(x.size());
  for (Index k = 0; k < g.vertex_count(); ++k) {
    out[k] = detail::normalized_degree_unchecked(g, k, mode) * x[k] -
             detail::neighbor_sum_unchecked(g, x.data(), k, mode);
  }
  return out;
}

}  // namespace sgsvd
