#include "sgsvd/deflation.hpp"

#include <string>

#include "sgsvd/errors.hpp"

namespace sgsvd {

DenseMatrix deflate(const DenseMatrix& x, const FactorTriple& f) {
  if (f.u.size() != x.rows() || f.v.size() != x.cols()) {
    throw DimensionError("factor shape (" + std::to_string(f.u.size()) + ", " +
                         std::to_string(f.v.size()) + ") does not match matrix " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  if (f.d == 0.0) return x;
  return DenseMatrix(RowMajorMatrix(x.values() - f.d * f.u * f.v.transpose()));
}

FactorSeries fit_rank_k(const DenseMatrix& x, const PriorGraph& g_rows, const PriorGraph& g_cols,
                        const SolverConfig& cfg, Index k_factors) {
  if (k_factors < 1) throw ConfigError("rank must be at least 1");
  FactorSeries series;
  series.factors.reserve(static_cast<std::size_t>(k_factors));
  DenseMatrix residual = x;
  for (Index t = 0; t < k_factors; ++t) {
    RankOneFit fit = [&] {
      try {
        return fit_rank_one(residual, g_rows, g_cols, cfg);
      } catch (const DegenerateError& e) {
        throw DegenerateError("factor " + std::to_string(t) + ": " + e.what());
      }
    }();
    residual = deflate(residual, fit.factor);
    series.residual_norms.push_back(residual.frobenius_norm());
    series.factors.push_back(std::move(fit.factor));
    series.traces.push_back(std::move(fit.trace));
  }
  return series;
}

}  // namespace sgsvd
