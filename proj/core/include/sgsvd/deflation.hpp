#pragma once

#include <vector>

#include "sgsvd/solver.hpp"

namespace sgsvd {

/// K layers extracted by repeated fit-then-subtract. traces[t].converged
/// flags layers that hit max_iter; they are kept.
struct FactorSeries {
  std::vector<FactorTriple> factors;
  std::vector<IterationTrace> traces;
  // ||X_t||_F after removing layer t.
  std::vector<double> residual_norms;
};

/// X - d u v^T.
DenseMatrix deflate(const DenseMatrix& x, const FactorTriple& f);

/// Each layer is fit from a fresh initialization on the current residual.
/// Degenerate-update errors are rethrown with the layer index prefixed.
FactorSeries fit_rank_k(const DenseMatrix& x, const PriorGraph& g_rows, const PriorGraph& g_cols,
                        const SolverConfig& cfg, Index k_factors);

}  // namespace sgsvd
