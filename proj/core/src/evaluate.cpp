#include "sgsvd/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "sgsvd/errors.hpp"

namespace sgsvd {

namespace {

std::uint64_t pairs(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

double log_choose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<Index> checked_unique(std::span<const Index> idx, Index bound, const char* what) {
  std::vector<Index> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  for (Index i : sorted) {
    if (i < 0 || i >= bound) {
      throw DimensionError(std::string(what) + " index " + std::to_string(i) +
                           " outside [0, " + std::to_string(bound) + ")");
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError(std::string(what) + " contains duplicate indices");
  }
  return sorted;
}

}  // namespace

SupportMetrics support_metrics(const Vector& estimated, std::span<const Index> truth_support) {
  if (truth_support.empty()) throw ConfigError("empty truth support: sensitivity undefined");
  const auto truth = checked_unique(truth_support, estimated.size(), "truth support");
  std::vector<bool> in_truth(static_cast<std::size_t>(estimated.size()), false);
  for (Index i : truth) in_truth[i] = true;

  SupportMetrics m;
  for (Index i = 0; i < estimated.size(); ++i) {
    const bool predicted = estimated[i] != 0.0;
    if (in_truth[i]) {
      (predicted ? m.true_positives : m.false_negatives) += 1;
    } else {
      (predicted ? m.false_positives : m.true_negatives) += 1;
    }
  }
  m.sensitivity = static_cast<double>(m.true_positives) /
                  static_cast<double>(m.true_positives + m.false_negatives);
  const Index negatives = m.true_negatives + m.false_positives;
  m.specificity = negatives == 0 ? std::numeric_limits<double>::quiet_NaN()
                                 : static_cast<double>(m.true_negatives) /
                                       static_cast<double>(negatives);
  return m;
}

double fc_score(std::uint64_t module_size, std::uint64_t internal_edges,
                std::uint64_t total_vertices, std::uint64_t total_edges) {
  if (module_size < 2) throw ConfigError("FC needs a module of at least two vertices");
  if (total_vertices < 2) throw ConfigError("FC needs a graph of at least two vertices");
  if (total_edges == 0) throw DegenerateError("FC undefined: background graph has no edges");
  if (internal_edges > pairs(module_size)) {
    throw ConfigError("module has more internal edges than vertex pairs");
  }
  // Cross-multiplied form keeps the hand-checkable cases exact.
  const double numerator = static_cast<double>(internal_edges) * static_cast<double>(pairs(total_vertices));
  const double denominator = static_cast<double>(total_edges) * static_cast<double>(pairs(module_size));
  return numerator / denominator;
}

double hypergeom_right_tail(std::uint64_t observed, std::uint64_t successes, std::uint64_t draws,
                            std::uint64_t population) {
  if (draws > population || successes > population || observed > draws) {
    throw ConfigError("hypergeometric arguments out of range: observed=" +
                      std::to_string(observed) + " successes=" + std::to_string(successes) +
                      " draws=" + std::to_string(draws) + " population=" +
                      std::to_string(population));
  }
  const std::uint64_t failures = population - successes;
  const std::uint64_t lo = draws > failures ? draws - failures : 0;
  const std::uint64_t hi = std::min(draws, successes);
  if (observed <= lo) return 1.0;
  if (observed > hi) return 0.0;

  const auto N = static_cast<double>(population);
  const auto K = static_cast<double>(successes);
  const auto n = static_cast<double>(draws);
  double k = static_cast<double>(observed);
  double term = std::exp(log_choose(K, k) + log_choose(N - K, n - k) - log_choose(N, n));
  double tail = 0.0;
  for (std::uint64_t j = observed; j <= hi; ++j) {
    tail += term;
    if (term == 0.0 && tail > 0.0) break;
    k = static_cast<double>(j);
    term *= (K - k) * (n - k) / ((k + 1.0) * (N - K - n + k + 1.0));
  }
  return std::clamp(tail, 0.0, 1.0);
}

std::uint64_t count_internal_edges(const PriorGraph& g, std::span<const Index> module) {
  const auto members = checked_unique(module, g.vertex_count(), "module");
  std::vector<bool> in_module(static_cast<std::size_t>(g.vertex_count()), false);
  for (Index i : members) in_module[i] = true;
  std::uint64_t count = 0;
  for (Index i : members) {
    for (Index j : g.neighbors(i)) {
      if (j > i && in_module[j]) ++count;
    }
  }
  return count;
}

ModuleEnrichment module_enrichment(const PriorGraph& g, std::span<const Index> module) {
  ModuleEnrichment e;
  e.module_size = static_cast<Index>(module.size());
  e.internal_edges = count_internal_edges(g, module);
  const auto n_i = static_cast<std::uint64_t>(module.size());
  const auto N = static_cast<std::uint64_t>(g.vertex_count());
  const auto M = static_cast<std::uint64_t>(g.edge_count());
  e.fc = fc_score(n_i, e.internal_edges, N, M);
  e.p_value = hypergeom_right_tail(e.internal_edges, M, pairs(n_i), pairs(N));
  return e;
}

namespace {

// Rows centred and scaled to unit norm, so Pearson r is a dot product.
RowMajorMatrix standardized_rows(const DenseMatrix& x) {
  RowMajorMatrix z = x.values();
  for (Index i = 0; i < z.rows(); ++i) {
    auto row = z.row(i);
    row.array() -= row.mean();
    const double norm = row.norm();
    if (!(norm > 0.0)) {
      throw DegenerateError("row " + std::to_string(i) + " is constant; correlation undefined");
    }
    row /= norm;
  }
  return z;
}

double summed_abs_correlation(const RowMajorMatrix& z, const std::vector<Index>& rows) {
  double total = 0.0;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      total += std::abs(z.row(rows[a]).dot(z.row(rows[b])));
    }
  }
  return total;
}

}  // namespace

double module_correlation_excess(const DenseMatrix& x, std::span<const Index> module_rows,
                                 int n_permutations, Rng& rng) {
  if (module_rows.size() < 2) throw ConfigError("module needs at least two rows");
  if (n_permutations < 1) throw ConfigError("n_permutations must be at least 1");
  const auto module = checked_unique(module_rows, x.rows(), "module");
  if (x.cols() < 2) throw DegenerateError("correlation needs at least two columns");

  const RowMajorMatrix z = standardized_rows(x);
  const double observed = summed_abs_correlation(z, module);

  std::vector<Index> pool(static_cast<std::size_t>(x.rows()));
  std::iota(pool.begin(), pool.end(), Index{0});
  const auto m = module.size();
  int at_least = 0;
  std::vector<Index> draw(m);
  for (int trial = 0; trial < n_permutations; ++trial) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto remaining = static_cast<Index>(pool.size() - i);
      std::swap(pool[i], pool[i + static_cast<std::size_t>(rng.index(remaining))]);
    }
    std::copy_n(pool.begin(), m, draw.begin());
    std::sort(draw.begin(), draw.end());
    if (summed_abs_correlation(z, draw) >= observed) ++at_least;
  }
  return static_cast<double>(at_least + 1) / static_cast<double>(n_permutations + 1);
}

}  // namespace sgsvd
