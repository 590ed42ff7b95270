#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sgsvd/errors.hpp"
#include "sgsvd/factor.hpp"
#include "sgsvd/rng.hpp"
#include "sgsvd/simulate.hpp"

using namespace sgsvd;

TEST(Rng, DocumentedUniformMapping) {
  Rng rng(1);
  std::mt19937_64 engine(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(rng.uniform(), static_cast<double>(engine() >> 11) * 0x1.0p-53);
  }
}

TEST(Rng, NormalQuantileKnownValues) {
  EXPECT_EQ(normal_quantile(0.5), 0.0);
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-14);
  EXPECT_NEAR(normal_quantile(0.001), -3.090232306167813, 1e-13);
  EXPECT_TRUE(std::isfinite(normal_quantile(0.5 * 0x1.0p-53)));
}

TEST(Rng, NormalMomentsAreStandard) {
  Rng rng(3);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(Rng, IndexAndBernoulliBounds) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Index k = rng.index(7);
    EXPECT_GE(k, 0);
    EXPECT_LT(k, 7);
    EXPECT_FALSE(rng.bernoulli(0.0));
    EXPECT_TRUE(rng.bernoulli(1.0));
  }
}

TEST(GenSignalVector, MixedSignsOnLeadingBlock) {
  Rng rng(5);
  const Vector v = gen_signal_vector(4, 2, SignMode::Mixed, SignalSide::Row, rng);
  EXPECT_EQ(support_of(v), (std::vector<Index>{0, 1}));
  EXPECT_NEAR(std::abs(v[0]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(v[1]), 1 / std::sqrt(2.0), 1e-15);
}

TEST(GenSignalVector, SameSignRules) {
  Rng a(6), b(6);
  const Vector row = gen_signal_vector(10, 5, SignMode::SameSign, SignalSide::Row, a);
  const Vector col = gen_signal_vector(10, 5, SignMode::SameSign, SignalSide::Column, b);
  for (Index i = 0; i < 5; ++i) {
    EXPECT_EQ(row[i], 1 / std::sqrt(5.0));
    EXPECT_EQ(col[i], -1 / std::sqrt(5.0));
  }
  EXPECT_EQ(row.tail(5), Vector::Zero(5));
}

TEST(GenSignalVector, DeterministicAndValidated) {
  Rng a(7), b(7);
  EXPECT_EQ(gen_signal_vector(20, 8, SignMode::Mixed, SignalSide::Row, a),
            gen_signal_vector(20, 8, SignMode::Mixed, SignalSide::Row, b));
  EXPECT_THROW(gen_signal_vector(4, 5, SignMode::Mixed, SignalSide::Row, a), ConfigError);
}

TEST(GenBlockGraph, ExtremeProbabilities) {
  Rng rng(8);
  EXPECT_EQ(gen_block_graph(10, 5, 0.0, 0.0, rng).edge_count(), 0u);
  EXPECT_EQ(gen_block_graph(4, 2, 1.0, 1.0, rng).edge_count(), 6u);
  EXPECT_THROW(gen_block_graph(4, 2, 1.5, 0.0, rng), ConfigError);
}

TEST(GenBlockGraph, BlockEdgeCountMatchesBinomialMean) {
  const int seeds = 200;
  const double pairs = 50.0 * 49.0 / 2.0;
  double sum = 0.0;
  double outside_sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(1000 + s);
    const PriorGraph g = gen_block_graph(100, 50, 0.3, 0.1, rng);
    std::size_t inside = 0;
    for (const auto& e : g.edges()) inside += (e.first < 50 && e.second < 50) ? 1 : 0;
    sum += static_cast<double>(inside);
    outside_sum += static_cast<double>(g.edge_count() - inside);
  }
  const double mean = sum / seeds;
  const double se = std::sqrt(pairs * 0.3 * 0.7 / seeds);
  EXPECT_NEAR(mean, 367.5, 3 * se);
  const double outside_pairs = 100.0 * 99.0 / 2.0 - pairs;
  const double outside_se = std::sqrt(outside_pairs * 0.1 * 0.9 / seeds);
  EXPECT_NEAR(outside_sum / seeds, 0.1 * outside_pairs, 3 * outside_se);
}

TEST(GenDataset, NoiselessIsExactRankOne) {
  SimSpec spec;
  spec.gamma = 0.0;
  const Dataset ds = gen_dataset(spec);
  const RowMajorMatrix outer = ds.truth.u_true * ds.truth.v_true.transpose();
  EXPECT_EQ(ds.x.values(), outer);
  EXPECT_NEAR(ds.truth.u_true.norm(), 1.0, 1e-15);
  EXPECT_NEAR(ds.truth.v_true.norm(), 1.0, 1e-15);
  EXPECT_NEAR(Eigen::JacobiSVD<Eigen::MatrixXd>(ds.x.values()).singularValues()[0], 1.0, 1e-12);
  EXPECT_EQ(ds.truth.support_u.size(), 50u);
  EXPECT_EQ(ds.truth.support_v.size(), 50u);
}

TEST(GenDataset, NoiseScale) {
  double total = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    SimSpec spec;
    spec.seed = 500 + s;
    const Dataset ds = gen_dataset(spec);
    const RowMajorMatrix noise = ds.x.values() - ds.truth.u_true * ds.truth.v_true.transpose();
    total += noise.norm();
  }
  EXPECT_NEAR(total / seeds, 6.0, 0.3);
}

TEST(GenDataset, SameSeedIsBitIdentical) {
  SimSpec spec;
  spec.seed = 9;
  const Dataset a = gen_dataset(spec);
  const Dataset b = gen_dataset(spec);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.row_graph.edges(), b.row_graph.edges());
  EXPECT_EQ(a.col_graph.edges(), b.col_graph.edges());
  spec.seed = 10;
  EXPECT_FALSE(a.x == gen_dataset(spec).x);
}

TEST(GenDataset, GraphsDoNotDependOnGamma) {
  // Noise is drawn even at gamma = 0, so the graph stream stays aligned.
  SimSpec spec;
  spec.seed = 12;
  const Dataset noisy = gen_dataset(spec);
  spec.gamma = 0.0;
  const Dataset clean = gen_dataset(spec);
  EXPECT_EQ(noisy.row_graph.edges(), clean.row_graph.edges());
  EXPECT_EQ(noisy.truth.u_true, clean.truth.u_true);
}

TEST(SimSpec, Validation) {
  SimSpec spec;
  spec.support_u = 200;
  EXPECT_THROW(spec.validate(), ConfigError);
  spec = SimSpec{};
  spec.gamma = -0.1;
  EXPECT_THROW(spec.validate(), ConfigError);
  spec = SimSpec{};
  spec.p12 = 1.1;
  EXPECT_THROW(spec.validate(), ConfigError);
}

TEST(GammaSweep, NineValues) {
  const auto gammas = gamma_sweep(0.02, 0.06, 0.005);
  ASSERT_EQ(gammas.size(), 9u);
  EXPECT_DOUBLE_EQ(gammas.front(), 0.02);
  EXPECT_NEAR(gammas.back(), 0.06, 1e-15);
  EXPECT_THROW(gamma_sweep(0.02, 0.06, 0.0), ConfigError);
}
