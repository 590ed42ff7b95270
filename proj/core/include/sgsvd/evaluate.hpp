#pragma once

#include <cstdint>
#include <span>

#include "sgsvd/graph.hpp"
#include "sgsvd/matrix.hpp"
#include "sgsvd/rng.hpp"

namespace sgsvd {

/// Confusion counts of an estimated support (exact nonzeros) against a
/// planted one. Specificity is NaN when the truth covers every coordinate.
struct SupportMetrics {
  double sensitivity = 0.0;
  double specificity = 0.0;
  Index true_positives = 0;
  Index false_positives = 0;
  Index true_negatives = 0;
  Index false_negatives = 0;
};

SupportMetrics support_metrics(const Vector& estimated, std::span<const Index> truth_support);

/// Edge density of a module relative to the whole graph:
///   (m_i / C(n_i, 2)) / (M / C(N, 2)).
double fc_score(std::uint64_t module_size, std::uint64_t internal_edges,
                std::uint64_t total_vertices, std::uint64_t total_edges);

/// P(X >= observed) for X ~ Hypergeometric(population, successes, draws).
/// First term from log-gamma, the rest by the term-ratio recurrence.
double hypergeom_right_tail(std::uint64_t observed, std::uint64_t successes, std::uint64_t draws,
                            std::uint64_t population);

struct ModuleEnrichment {
  Index module_size = 0;
  std::uint64_t internal_edges = 0;
  double fc = 0.0;
  double p_value = 1.0;
};

std::uint64_t count_internal_edges(const PriorGraph& g, std::span<const Index> module);

/// FC score and right-tailed hypergeometric p-value of a vertex set, with
/// population C(N, 2), successes M, draws C(n_i, 2), observed m_i.
ModuleEnrichment module_enrichment(const PriorGraph& g, std::span<const Index> module);

inline constexpr int kDefaultPermutations = 1000;

/// Permutation p-value of the module's summed absolute pairwise Pearson
/// correlation against random row sets of the same size:
///   (1 + #{random >= observed}) / (1 + n_permutations).
double module_correlation_excess(const DenseMatrix& x, std::span<const Index> module_rows,
                                 int n_permutations, Rng& rng);

}  // namespace sgsvd
