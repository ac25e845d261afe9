// Copyright 2026 The FQA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqa/measurement.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"

namespace fqa {
namespace {

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

template <typename F>
Moments sample(int n, F draw) {
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = draw(i);
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  return {mean, std::sqrt((s2 - n * mean * mean) / (n - 1))};
}

TEST(NoiseModel, ParsingAndValidation) {
  for (NoiseKind k : {NoiseKind::kIdeal, NoiseKind::kEigenMultinomial,
                      NoiseKind::kGroupedPauli}) {
    EXPECT_EQ(parse_noise_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_noise_kind("shot"), std::invalid_argument);
  NoiseModel n{NoiseKind::kEigenMultinomial, 0, 0};
  EXPECT_THROW(n.validate(), std::invalid_argument);
}

TEST(Plan, GeneralGroupingCountsCircuits) {
  std::mt19937_64 rng(1);
  const PauliSum obs = testing::random_pauli_sum(rng, 4, 20, true, true, true);
  const MeasurementPlan p = make_plan(obs, 25);
  EXPECT_EQ(p.circuit_count, static_cast<int>(p.groups.size()));
  EXPECT_EQ(p.samples_per_circuit, 25);
  EXPECT_EQ(p.total_samples(), 25LL * p.circuit_count);
  EXPECT_EQ(p.string_count(), simplify(obs).size());
  for (const PauliSum& g : p.groups) EXPECT_TRUE(mutually_commuting(g));
}

class PlanFh : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(PlanFh, BoundAndCoverage) {
  const auto [rows, cols] = GetParam();
  LatticeSpec s;
  s.n_rows = rows;
  s.n_cols = cols;
  s.u = 3.0;
  const HubbardModel m = build_hubbard(s);
  const MeasurementPlan p = plan_fh(m, 7);
  EXPECT_LE(p.circuit_count, 4 * cols + 6);
  EXPECT_EQ(p.string_count(), simplify(m.feedback_obs).size());
  PauliSum total(s.n_qubits());
  for (const PauliSum& g : p.groups) {
    EXPECT_TRUE(mutually_commuting(g));
    total += g;
  }
  EXPECT_TRUE(approx_equal(total, m.feedback_obs, 1e-14));
}

INSTANTIATE_TEST_SUITE_P(Lattices, PlanFh,
                         ::testing::Values(std::pair{1, 2}, std::pair{1, 4},
                                           std::pair{2, 2}, std::pair{2, 4},
                                           std::pair{3, 3}));

TEST(MolecularCost, ClosedFormsAgree) {
  for (int n = 2; n <= 40; ++n) {
    EXPECT_EQ(molecular_group_count_binomial(n),
              molecular_group_count_quartic(n))
        << n;
  }
  EXPECT_EQ(plan_molecular(4, 1).group_count, 41);
  EXPECT_EQ(plan_molecular(12, 1).group_count, 8185);
  EXPECT_EQ(plan_molecular(4, 100).total_samples, 4100);
  EXPECT_THROW(plan_molecular(1, 1), std::invalid_argument);
}

TEST(GroupedEstimator, ExactEqualsExpectation) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const PauliSum obs = testing::random_pauli_sum(rng, n, 12, true, true, true);
    const StateVector s = testing::random_state(rng, n);
    const GroupedEstimator est(make_plan(obs, 1));
    EXPECT_NEAR(est.exact(s), expectation(s, obs), 1e-12);
    NoiseModel ideal;
    EXPECT_NEAR(est.estimate(s, ideal), expectation(s, obs), 1e-12);
  }
}

TEST(GroupedEstimator, ExactWithDependentStrings) {
  // X0X1, Z0Z1 and their product -Y0Y1 in one group: rank 2, three strings.
  PauliSum obs(2);
  obs.add(PauliString::parse("X0 X1", 2, 0.7));
  obs.add(PauliString::parse("Z0 Z1", 2, -0.4));
  obs.add(PauliString::parse("Y0 Y1", 2, 0.25));
  obs.add(PauliString(2, 1.5));
  MeasurementPlan plan;
  plan.groups = {obs};
  plan.circuit_count = 1;
  std::mt19937_64 rng(3);
  const StateVector s = testing::random_state(rng, 2);
  EXPECT_NEAR(GroupedEstimator(plan).exact(s), expectation(s, obs), 1e-12);
}

TEST(GroupedEstimator, ShotStatisticsMatchAnalyticSigma) {
  std::mt19937_64 rng(4);
  const PauliSum obs = testing::random_pauli_sum(rng, 3, 8, true, true, true);
  const StateVector s = testing::random_state(rng, 3);
  const GroupedEstimator est(make_plan(obs, 1));
  NoiseModel noise{NoiseKind::kGroupedPauli, 40, 9};
  constexpr int trials = 4000;
  const Moments m = sample(trials, [&](int i) {
    return est.estimate(s, noise, {static_cast<std::uint32_t>(i), 0, 0});
  });
  const double sigma = est.analytic_sigma(s, noise.m);
  EXPECT_NEAR(m.mean, est.exact(s), 5.0 * sigma / std::sqrt(trials));
  EXPECT_NEAR(m.stddev, sigma, 0.1 * sigma);
}

TEST(Eigenbasis, UnbiasedWithMultinomialSpread) {
  std::mt19937_64 rng(5);
  const PauliSum obs = testing::random_pauli_sum(rng, 3, 6, true, true, true);
  const StateVector s = testing::random_state(rng, 3);
  const Eigen::MatrixXcd o = testing::kron_matrix(obs);
  const Eigen::VectorXcd v = testing::to_vector(s);
  const double mean = testing::dense_expectation(o, v);
  const double var = testing::dense_expectation(o * o, v) - mean * mean;
  NoiseModel noise{NoiseKind::kEigenMultinomial, 25, 17};
  constexpr int trials = 4000;
  const Moments m = sample(trials, [&](int i) {
    return estimate_eigenbasis(s, obs, noise, {0, static_cast<std::uint32_t>(i), 0});
  });
  const double sigma = std::sqrt(var / noise.m);
  EXPECT_NEAR(m.mean, mean, 5.0 * sigma / std::sqrt(trials));
  EXPECT_NEAR(m.stddev, sigma, 0.1 * sigma);
}

TEST(Eigenbasis, SeededDrawsAreReproducible) {
  std::mt19937_64 rng(6);
  const PauliSum obs = testing::random_pauli_sum(rng, 3, 6, true, true, true);
  const StateVector s = testing::random_state(rng, 3);
  NoiseModel noise{NoiseKind::kEigenMultinomial, 10, 123};
  const double a = estimate_eigenbasis(s, obs, noise, {4, 0, 0});
  EXPECT_EQ(a, estimate_eigenbasis(s, obs, noise, {4, 0, 0}));
  bool any_differs = false;
  for (std::uint32_t k = 5; k < 15; ++k) {
    any_differs |= a != estimate_eigenbasis(s, obs, noise, {k, 0, 0});
  }
  EXPECT_TRUE(any_differs);
}

TEST(EigenbasisCache, ReusesDecompositions) {
  EigenbasisCache cache;
  PauliSum a(2);
  a.add(PauliString::parse("X0", 2, 1.0));
  a.add(PauliString::parse("Z1", 2, 0.5));
  PauliSum b(2);
  b.add(PauliString::parse("Z1", 2, 0.5));
  b.add(PauliString::parse("X0", 2, 1.0));
  const auto first = cache.get(a);
  const auto second = cache.get(b);
  EXPECT_EQ(first.get(), second.get());
  EXPECT_EQ(cache.computations(), 1u);
  EXPECT_EQ(cache.size(), 1u);
}

TEST(EigenbasisCache, RejectsUnsupportedObservables) {
  EigenbasisCache cache;
  EXPECT_THROW(cache.get(PauliSum(kMaxEigenbasisQubits + 1)),
               std::invalid_argument);
  PauliSum h(1);
  h.add(PauliString::parse("X0", 1, Complex(0.0, 1.0)));
  EXPECT_THROW(cache.get(h), std::invalid_argument);
}

TEST(FeedbackEstimator, IdealReturnsExpectation) {
  std::mt19937_64 rng(7);
  const PauliSum obs = testing::random_pauli_sum(rng, 3, 6, true, true, true);
  const StateVector s = testing::random_state(rng, 3);
  const FeedbackEstimator est(obs, NoiseModel{});
  EXPECT_NEAR(est.estimate(s, {}), expectation(s, obs), 1e-12);
  EXPECT_NEAR(est.exact(s), expectation(s, obs), 1e-12);
}

}  // namespace
}  // namespace fqa
