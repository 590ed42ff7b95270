#include "sgsvd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sgsvd/errors.hpp"
#include "sgsvd/rng.hpp"

namespace sgsvd {

namespace {

constexpr int kPowerSteps = 50;

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void check_graph(const PriorGraph& g, Index length) {
  if (g.vertex_count() != 0 && g.vertex_count() != length) {
    throw DimensionError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices but the vector has length " + std::to_string(length));
  }
}

void check_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

double coordinate_denominator(const PriorGraph& g, Index k, double sigma,
                              const UpdateOptions& opts) {
  if (opts.denominator == DenominatorMode::AlgorithmPseudocode) return 1.0;
  const double diag =
      g.vertex_count() == 0 ? 0.0 : detail::normalized_degree_unchecked(g, k, opts.laplacian);
  return opts.eta + sigma * diag;
}

double divide_or_throw(double numerator, double denominator, Index k) {
  if (denominator == 1.0) return numerator;
  if (denominator > 0.0) return numerator / denominator;
  if (numerator == 0.0) return 0.0;
  throw DegenerateError("zero coordinate denominator (eta + sigma * L_kk) at index " +
                        std::to_string(k));
}

SweepOrder resolve(SweepOrder order, SweepOrder fallback) {
  return order == SweepOrder::Auto ? fallback : order;
}

// Shared pass. Signed keeps the sign of z and skips the threshold; the
// magnitude form clamps at zero after subtracting lambda.
template <bool Signed>
void smoothing_pass(const Vector& base, const PriorGraph& g, Vector& values, double lambda,
                    double sigma, const UpdateOptions& opts, SweepOrder order) {
  const bool smooth = sigma != 0.0 && g.edge_count() > 0;
  Vector snapshot;
  const double* source = values.data();
  if (smooth && order == SweepOrder::Jacobi) {
    snapshot = values;
    source = snapshot.data();
  }
  for (Index k = 0; k < base.size(); ++k) {
    double value = base[k];
    if (smooth) value += sigma * detail::neighbor_sum_unchecked(g, source, k, opts.laplacian);
    if constexpr (!Signed) value = std::max(value - lambda, 0.0);
    values[k] = divide_or_throw(value, coordinate_denominator(g, k, sigma, opts), k);
  }
}

Vector normalized_or_throw(Vector v, const char* what) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw DegenerateError(std::string(what) + ": update is identically zero");
  v /= norm;
  return v;
}

}  // namespace

bool uses_cardinality(Variant variant) { return variant != Variant::L1SgsvdStar; }

void SolverConfig::validate(Index n, Index p) const {
  if (uses_cardinality(variant)) {
    require(k_u >= 1 && k_u <= n,
            "k_u must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k_u));
    require(k_v >= 1 && k_v <= p,
            "k_v must lie in [1, " + std::to_string(p) + "], got " + std::to_string(k_v));
  }
  require(lambda_u >= 0.0 && lambda_v >= 0.0, "lambda must be nonnegative");
  require(sigma_u >= 0.0 && sigma_v >= 0.0, "sigma must be nonnegative");
  require(eta >= 0.0, "eta must be nonnegative");
  require(epsilon > 0.0, "epsilon must be positive");
  require(max_iter >= 1, "max_iter must be at least 1");
}

Vector init_v(const DenseMatrix& x, const Initialization& init) {
  const double fro = x.frobenius_norm();
  if (!(fro > 0.0)) throw DegenerateError("cannot initialize from an all-zero matrix");
  const Index p = x.cols();

  if (init.kind == InitKind::SeededRandom) {
    Rng rng(init.seed);
    Vector w(p);
    for (Index j = 0; j < p; ++j) w[j] = rng.normal();
    return normalized_or_throw(std::move(w), "random init");
  }

  Vector w = Vector::Ones(p) / std::sqrt(static_cast<double>(p));
  Vector y = x.multiply(w);
  if (y.norm() <= 1e-12 * fro) {
    Index heaviest = 0;
    x.values().colwise().squaredNorm().maxCoeff(&heaviest);
    w = Vector::Unit(p, heaviest);
    y = x.multiply(w);
  }
  w = normalized_or_throw(x.multiply_transpose(y), "power iteration");
  for (int step = 1; step < kPowerSteps; ++step) {
    w = normalized_or_throw(x.gram_multiply(w), "power iteration");
  }
  return w;
}

void coordinate_sweep(const Vector& z_abs, const PriorGraph& g, Vector& magnitudes,
                      double lambda, double sigma, const UpdateOptions& opts) {
  check_same_length(z_abs, magnitudes);
  check_graph(g, z_abs.size());
  smoothing_pass<false>(z_abs, g, magnitudes, lambda, sigma, opts,
                        resolve(opts.sweep, SweepOrder::GaussSeidel));
}

Vector update_l1(const Vector& z, const PriorGraph& g, const Vector& v_prev, double lambda,
                 double sigma, const UpdateOptions& opts) {
  require(lambda >= 0.0 && sigma >= 0.0, "lambda and sigma must be nonnegative");
  check_same_length(z, v_prev);
  Vector magnitudes = v_prev.cwiseAbs();
  coordinate_sweep(z.cwiseAbs(), g, magnitudes, lambda, sigma, opts);
  if (magnitudes.isZero(0.0)) {
    throw DegenerateError("soft threshold lambda = " + std::to_string(lambda) +
                          " shrinks every coordinate to zero");
  }
  return normalized_or_throw(restore_signs(magnitudes, z), "L1 update");
}

Vector update_l0(const Vector& z, const PriorGraph& g, const Vector& v_prev, Index k_card,
                 double sigma, const UpdateOptions& opts) {
  require(sigma >= 0.0, "sigma must be nonnegative");
  check_same_length(z, v_prev);
  check_graph(g, z.size());
  Vector magnitudes = v_prev.cwiseAbs();
  smoothing_pass<false>(z.cwiseAbs(), g, magnitudes, 0.0, sigma, opts,
                        resolve(opts.sweep, SweepOrder::Jacobi));
  return normalized_or_throw(restore_signs(project_top_k(magnitudes, k_card), z), "L0 update");
}

Vector update_signed_l0(const Vector& z, const PriorGraph& g, const Vector& v_prev,
                        Index k_card, double sigma, const UpdateOptions& opts) {
  require(sigma >= 0.0, "sigma must be nonnegative");
  check_same_length(z, v_prev);
  check_graph(g, z.size());
  Vector values = v_prev;
  smoothing_pass<true>(z, g, values, 0.0, sigma, opts, resolve(opts.sweep, SweepOrder::Jacobi));
  return normalized_or_throw(project_top_k(values, k_card), "signed L0 update");
}

Vector project_top_k(const Vector& v, Index k_card) {
  const Index len = v.size();
  require(k_card >= 1 && k_card <= len,
          "k must lie in [1, " + std::to_string(len) + "], got " + std::to_string(k_card));
  if (k_card == len) return v;
  std::vector<Index> order(static_cast<std::size_t>(len));
  std::iota(order.begin(), order.end(), Index{0});
  auto larger = [&v](Index a, Index b) {
    const double fa = std::abs(v[a]);
    const double fb = std::abs(v[b]);
    return fa > fb || (fa == fb && a < b);
  };
  std::nth_element(order.begin(), order.begin() + (k_card - 1), order.end(), larger);
  Vector out = Vector::Zero(len);
  for (Index i = 0; i < k_card; ++i) out[order[i]] = v[order[i]];
  return out;
}

Vector restore_signs(const Vector& v_abs, const Vector& z) {
  check_same_length(v_abs, z);
  Vector out(v_abs.size());
  for (Index k = 0; k < v_abs.size(); ++k) {
    if (v_abs[k] < 0.0) {
      throw ConfigError("restore_signs expects nonnegative magnitudes (index " +
                        std::to_string(k) + ")");
    }
    out[k] = z[k] > 0.0 ? v_abs[k] : (z[k] < 0.0 ? -v_abs[k] : 0.0);
  }
  return out;
}

double singular_value(const DenseMatrix& x, const Vector& u, const Vector& v) {
  if (u.size() != x.rows()) {
    throw DimensionError("u has length " + std::to_string(u.size()) + ", expected " +
                         std::to_string(x.rows()));
  }
  return u.dot(x.multiply(v));
}

namespace {

struct SideParams {
  const PriorGraph& graph;
  Index k_card;
  double lambda;
  double sigma;
};

Vector update_side(Variant variant, const Vector& z, const SideParams& side, const Vector& prev,
                   const UpdateOptions& opts) {
  switch (variant) {
    case Variant::L1SgsvdStar:
      return update_l1(z, side.graph, prev, side.lambda, side.sigma, opts);
    case Variant::SgsvdClassic:
      return update_signed_l0(z, side.graph, prev, side.k_card, side.sigma, opts);
    case Variant::L0SgsvdStar:
    case Variant::L0Svd:
      break;
  }
  return update_l0(z, side.graph, prev, side.k_card, side.sigma, opts);
}

}  // namespace

RankOneFit fit_rank_one(const DenseMatrix& x, const PriorGraph& g_rows, const PriorGraph& g_cols,
                        const SolverConfig& cfg) {
  const Index n = x.rows();
  const Index p = x.cols();
  cfg.validate(n, p);
  check_graph(g_rows, n);
  check_graph(g_cols, p);

  const bool no_smoothing = cfg.variant == Variant::L0Svd;
  const SideParams rows{g_rows, cfg.k_u, cfg.lambda_u, no_smoothing ? 0.0 : cfg.sigma_u};
  const SideParams cols{g_cols, cfg.k_v, cfg.lambda_v, no_smoothing ? 0.0 : cfg.sigma_v};
  const UpdateOptions opts = cfg.update_options();

  RankOneFit fit;
  Vector v = init_v(x, cfg.init);
  // Magnitude prior for the first u sweep: the unconstrained direction X v.
  Vector u = normalized_or_throw(x.multiply(v), "initial u");

  auto& trace = fit.trace;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    u = update_side(cfg.variant, x.multiply(v), rows, u, opts);
    const Vector z = x.multiply_transpose(u);
    v = update_side(cfg.variant, z, cols, v, opts);
    const double d = z.dot(v);
    trace.d_history.push_back(d);
    trace.iterations = iter;
    if (iter > 1 && std::abs(d - trace.d_history[trace.d_history.size() - 2]) < cfg.epsilon) {
      trace.converged = true;
      break;
    }
  }

  double d = trace.d_history.back();
  if (d < 0.0) {
    // Only the signed variant can land here; (u, -v, -d) is the same layer.
    v = -v;
    d = -d;
  }
  fit.factor = FactorTriple{std::move(u), std::move(v), d};
  return fit;
}

}  // namespace sgsvd
