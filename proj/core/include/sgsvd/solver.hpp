#pragma once

#include <cstdint>
#include <vector>

#include "sgsvd/factor.hpp"
#include "sgsvd/graph.hpp"
#include "sgsvd/matrix.hpp"

namespace sgsvd {

/// Rank-one solver family.
///   L0SgsvdStar  - L0 cardinality + |v|^T L |v| smoothing, signs restored
///   L1SgsvdStar  - soft threshold lambda + |v|^T L |v| smoothing, signs restored
///   SgsvdClassic - L0 cardinality + v^T L v (signed) smoothing, no sign step
///   L0Svd        - L0SgsvdStar with both smoothing weights forced to zero
enum class Variant { L0SgsvdStar, L1SgsvdStar, SgsvdClassic, L0Svd };

/// ExactKkt divides each coordinate by (eta + sigma * L_kk); the pseudocode
/// form skips the division and lets normalization fix the scale.
enum class DenominatorMode { AlgorithmPseudocode, ExactKkt };

/// Where neighbour sums read their magnitudes from. GaussSeidel updates in
/// place in ascending index order (the L1 loop); Jacobi reads the previous
/// iterate for every coordinate (the L0 loop writes into a separate vector).
/// Auto picks GaussSeidel for the L1 update and Jacobi for the L0 updates.
enum class SweepOrder { Auto, GaussSeidel, Jacobi };

enum class InitKind { PowerIteration, SeededRandom };

struct Initialization {
  InitKind kind = InitKind::PowerIteration;
  std::uint64_t seed = 0;
};

struct UpdateOptions {
  DenominatorMode denominator = DenominatorMode::AlgorithmPseudocode;
  double eta = 1.0;
  LaplacianMode laplacian = LaplacianMode::Raw;
  SweepOrder sweep = SweepOrder::Auto;
};

struct SolverConfig {
  Variant variant = Variant::L0SgsvdStar;
  Index k_u = 1;
  Index k_v = 1;
  double lambda_u = 0.0;
  double lambda_v = 0.0;
  double sigma_u = 0.0;
  double sigma_v = 0.0;
  double eta = 1.0;
  DenominatorMode denominator = DenominatorMode::AlgorithmPseudocode;
  LaplacianMode laplacian = LaplacianMode::Raw;
  SweepOrder sweep = SweepOrder::Auto;
  double epsilon = 1e-6;
  int max_iter = 1000;
  Initialization init;

  // Throws ConfigError when a knob is outside its domain for an n x p input.
  void validate(Index n, Index p) const;
  UpdateOptions update_options() const { return {denominator, eta, laplacian, sweep}; }
};

bool uses_cardinality(Variant variant);

struct IterationTrace {
  std::vector<double> d_history;
  int iterations = 0;
  bool converged = false;
};

struct RankOneFit {
  FactorTriple factor;
  IterationTrace trace;
};

/// Unit-norm starting v. Power iteration runs 50 steps on X^T X from the
/// all-ones direction, falling back to the heaviest column's basis vector
/// when X maps the ones vector to (numerically) zero.
Vector init_v(const DenseMatrix& x, const Initialization& init);

/// One pass over nonnegative magnitudes:
///   m_k <- max(|z_k| + sigma * (A m)_k - lambda, 0) [/ (eta + sigma * L_kk)]
/// Under GaussSeidel (also what Auto means here) already-visited coordinates
/// feed later neighbour sums, which makes this exact coordinate descent on the
/// Lagrangian in ExactKkt mode. A graph with zero vertices means "no graph".
void coordinate_sweep(const Vector& z_abs, const PriorGraph& g, Vector& magnitudes,
                      double lambda, double sigma, const UpdateOptions& opts);

/// Soft-thresholded smoothing update with sign restoration. Throws
/// DegenerateError when every coordinate is shrunk to zero.
Vector update_l1(const Vector& z, const PriorGraph& g, const Vector& v_prev, double lambda,
                 double sigma, const UpdateOptions& opts);

/// Smoothing update, top-k projection, sign restoration.
Vector update_l0(const Vector& z, const PriorGraph& g, const Vector& v_prev, Index k_card,
                 double sigma, const UpdateOptions& opts);

/// Classic signed-Laplacian update: z_k + sigma * (A v)_k on signed values,
/// top-k by magnitude, normalized. No sign restoration.
Vector update_signed_l0(const Vector& z, const PriorGraph& g, const Vector& v_prev,
                        Index k_card, double sigma, const UpdateOptions& opts);

// Keeps the k_card entries of largest magnitude; ties go to the smaller index.
Vector project_top_k(const Vector& v, Index k_card);

// v_abs .* sign(z), sign(0) = 0.
Vector restore_signs(const Vector& v_abs, const Vector& z);

double singular_value(const DenseMatrix& x, const Vector& u, const Vector& v);

/// Alternating sparse projection for one (u, v, d) layer. Either graph may
/// have zero vertices, meaning no prior on that side. Non-convergence is
/// reported through the trace, not thrown.
RankOneFit fit_rank_one(const DenseMatrix& x, const PriorGraph& g_rows, const PriorGraph& g_cols,
                        const SolverConfig& cfg);

}  // namespace sgsvd
