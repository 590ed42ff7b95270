#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sgsvd/errors.hpp"
#include "sgsvd/evaluate.hpp"
#include "sgsvd/rng.hpp"

using namespace sgsvd;

namespace {

Vector indicator(Index n, std::initializer_list<Index> on) {
  Vector v = Vector::Zero(n);
  for (Index i : on) v[i] = 1.0;
  return v;
}

DenseMatrix iid_matrix(Index n, Index p, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  RowMajorMatrix m(n, p);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = normal(gen);
  return DenseMatrix(m);
}

}  // namespace

TEST(SupportMetrics, Examples) {
  const std::vector<Index> truth{0, 1};
  const auto same = support_metrics(indicator(4, {0, 1}), truth);
  EXPECT_EQ(same.sensitivity, 1.0);
  EXPECT_EQ(same.specificity, 1.0);
  const auto complement = support_metrics(indicator(4, {2, 3}), truth);
  EXPECT_EQ(complement.sensitivity, 0.0);
  EXPECT_EQ(complement.specificity, 0.0);
  const auto half = support_metrics(indicator(4, {0, 2}), truth);
  EXPECT_EQ(half.sensitivity, 0.5);
  EXPECT_EQ(half.specificity, 0.5);
  EXPECT_EQ(half.true_positives, 1);
  EXPECT_EQ(half.false_positives, 1);
  EXPECT_EQ(half.true_negatives, 1);
  EXPECT_EQ(half.false_negatives, 1);
}

TEST(SupportMetrics, Errors) {
  EXPECT_THROW(support_metrics(Vector::Ones(3), std::vector<Index>{}), ConfigError);
  EXPECT_THROW(support_metrics(Vector::Ones(3), std::vector<Index>{3}), DimensionError);
  EXPECT_THROW(support_metrics(Vector::Ones(3), std::vector<Index>{1, 1}), ConfigError);
  EXPECT_TRUE(std::isnan(support_metrics(Vector::Ones(2), std::vector<Index>{0, 1}).specificity));
}

TEST(SupportMetrics, JointPermutationInvariance) {
  std::mt19937_64 gen(3);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 20;
    Vector est(n);
    std::vector<Index> truth;
    for (Index i = 0; i < n; ++i) {
      est[i] = coin(gen) ? 1.0 : 0.0;
      if (coin(gen) || i == 0) truth.push_back(i);
    }
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Vector est_p(n);
    for (Index i = 0; i < n; ++i) est_p[perm[i]] = est[i];
    std::vector<Index> truth_p;
    for (Index i : truth) truth_p.push_back(perm[i]);
    const auto a = support_metrics(est, truth);
    const auto b = support_metrics(est_p, truth_p);
    EXPECT_EQ(a.true_positives, b.true_positives);
    EXPECT_EQ(a.false_positives, b.false_positives);
    EXPECT_EQ(a.sensitivity, b.sensitivity);
    EXPECT_EQ(a.true_positives + a.false_positives + a.true_negatives + a.false_negatives, n);
  }
}

TEST(FcScore, Examples) {
  EXPECT_EQ(fc_score(5, 4, 10, 9), 2.0);
  // Module density 2/10 equals background 9/45.
  EXPECT_EQ(fc_score(5, 2, 10, 9), 1.0);
  EXPECT_EQ(fc_score(5, 0, 10, 9), 0.0);
}

TEST(FcScore, Errors) {
  EXPECT_THROW(fc_score(1, 0, 10, 9), ConfigError);
  EXPECT_THROW(fc_score(5, 4, 10, 0), DegenerateError);
  EXPECT_THROW(fc_score(3, 4, 10, 9), ConfigError);
}

TEST(FcScore, InvariantUnderCommonDensityScaling) {
  // Doubling both module and background edge densities leaves FC unchanged.
  EXPECT_DOUBLE_EQ(fc_score(10, 6, 40, 78), fc_score(10, 12, 40, 156));
  EXPECT_DOUBLE_EQ(fc_score(6, 3, 30, 40), fc_score(6, 9, 30, 120));
}

TEST(HypergeomRightTail, Examples) {
  EXPECT_NEAR(hypergeom_right_tail(2, 4, 3, 10), 40.0 / 120.0, 1e-12);
  EXPECT_EQ(hypergeom_right_tail(0, 4, 3, 10), 1.0);
  EXPECT_EQ(hypergeom_right_tail(7, 7, 7, 7), 1.0);
  EXPECT_EQ(hypergeom_right_tail(4, 3, 4, 10), 0.0);
  EXPECT_THROW(hypergeom_right_tail(4, 3, 3, 10), ConfigError);
  EXPECT_THROW(hypergeom_right_tail(1, 11, 3, 10), ConfigError);
}

TEST(HypergeomRightTail, ExhaustiveSmallPopulations) {
  double worst = 0.0;
  for (std::uint64_t pop = 0; pop <= 30; ++pop) {
    for (std::uint64_t succ = 0; succ <= pop; ++succ) {
      for (std::uint64_t draws = 0; draws <= pop; ++draws) {
        double previous = 2.0;
        for (std::uint64_t obs = 0; obs <= draws; ++obs) {
          const double got = hypergeom_right_tail(obs, succ, draws, pop);
          const auto want = oracle::hypergeom_tail_exact(obs, succ, draws, pop);
          worst = std::max(worst, static_cast<double>(std::abs(got - want)));
          EXPECT_LE(got, previous);
          previous = got;
        }
      }
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(HypergeomRightTail, LargeArgumentsStayInRange) {
  // Mean 3000 * 1225 / 4950 = 742.4.
  const double p = hypergeom_right_tail(900, 3000, 1225, 4950);
  EXPECT_GT(p, 0.0);
  EXPECT_LT(p, 1e-20);
  EXPECT_GT(hypergeom_right_tail(700, 3000, 1225, 4950), 0.99);
  EXPECT_NEAR(hypergeom_right_tail(0, 3000, 1225, 4950), 1.0, 0.0);
}

TEST(ModuleEnrichment, CountsAndScores) {
  // Triangle 0-1-2 plus a pendant edge 3-4.
  const PriorGraph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  const std::vector<Index> module{2, 0, 1};
  EXPECT_EQ(count_internal_edges(g, module), 3u);
  const auto e = module_enrichment(g, module);
  EXPECT_EQ(e.module_size, 3);
  EXPECT_EQ(e.internal_edges, 3u);
  EXPECT_DOUBLE_EQ(e.fc, (3.0 / 3.0) / (4.0 / 10.0));
  EXPECT_NEAR(e.p_value, static_cast<double>(oracle::hypergeom_tail_exact(3, 4, 3, 10)), 1e-12);
}

TEST(ModuleCorrelation, IdenticalRowsAreExtreme) {
  // Only a random draw of the module itself can tie |r| = 1. With 200 rows
  // there are 19900 pairs, so none of these 200 draws hits it.
  std::mt19937_64 gen(5);
  RowMajorMatrix m = iid_matrix(200, 20, gen).values();
  m.row(7) = m.row(3);
  Rng rng(1);
  const double p = module_correlation_excess(DenseMatrix(m), std::vector<Index>{3, 7}, 200, rng);
  EXPECT_EQ(p, 1.0 / 201.0);
}

TEST(ModuleCorrelation, RedrawOfModuleCountsAsTie) {
  // Three rows: every random pair is drawn from 3 options, so the module's
  // own pair recurs; p stays well below a random module's but above 1/(n+1).
  RowMajorMatrix m(3, 4);
  m << 1, 2, 3, 4, 1, 2, 3, 4, 4, 1, 3, 2;
  Rng rng(2);
  const double p = module_correlation_excess(DenseMatrix(m), std::vector<Index>{0, 1}, 300, rng);
  EXPECT_GT(p, 1.0 / 301.0);
  EXPECT_NEAR(p, 1.0 / 3.0, 0.1);
}

TEST(ModuleCorrelation, SinglePermutationArithmetic) {
  std::mt19937_64 gen(6);
  const DenseMatrix x = iid_matrix(10, 8, gen);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const double p = module_correlation_excess(x, std::vector<Index>{0, 1, 2}, 1, rng);
    EXPECT_TRUE(p == 0.5 || p == 1.0) << p;
  }
}

TEST(ModuleCorrelation, RandomModulesAreCalibrated) {
  std::mt19937_64 gen(7);
  Rng rng(3);
  double sum = 0.0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const DenseMatrix x = iid_matrix(40, 15, gen);
    std::vector<Index> rows(40);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), gen);
    rows.resize(6);
    sum += module_correlation_excess(x, rows, 99, rng);
  }
  // Uniform p-values have standard deviation 0.289; the mean's SE is 0.02.
  EXPECT_NEAR(sum / trials, 0.5, 0.07);
}

TEST(ModuleCorrelation, Errors) {
  RowMajorMatrix m(3, 4);
  m << 1, 2, 3, 4, 5, 5, 5, 5, 0, 1, 0, 1;
  Rng rng(1);
  try {
    module_correlation_excess(DenseMatrix(m), std::vector<Index>{0, 2}, 10, rng);
    FAIL() << "expected DegenerateError";
  } catch (const DegenerateError& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
  const DenseMatrix ok{{1, 2}, {2, 1}, {0, 3}};
  EXPECT_THROW(module_correlation_excess(ok, std::vector<Index>{0}, 10, rng), ConfigError);
  EXPECT_THROW(module_correlation_excess(ok, std::vector<Index>{0, 1}, 0, rng), ConfigError);
}
