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

#include "fqa/fqa.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"

namespace fqa {
namespace {

LatticeSpec two_site() {
  LatticeSpec s;
  s.n_rows = 1;
  s.n_cols = 2;
  s.u = 5.0;
  s.n_up = 1;
  s.n_down = 1;
  return s;
}

struct HubbardFixture {
  HubbardModel model = build_hubbard(two_site());
  FqaProblem problem = hubbard_problem(model);
  SectorSpec sector = SectorSpec::spins(1, 1);
  EigenResult driver = sector_ground_state(problem.driver, sector);
  EigenResult ground = sector_ground_state(problem.problem, sector);
};

void expect_matches_oracle(const RunTrace& t, const testing::DenseTrace& d,
                           double tol) {
  const auto j = t.j_series();
  const auto b = t.beta_series();
  ASSERT_EQ(j.size(), d.j.size());
  ASSERT_EQ(b.size(), d.beta.size());
  for (std::size_t k = 0; k < j.size(); ++k) EXPECT_NEAR(j[k], d.j[k], tol) << k;
  for (std::size_t k = 0; k < b.size(); ++k) {
    EXPECT_NEAR(b[k], d.beta[k], tol) << k;
  }
}

TEST(RunFqa, HubbardMatchesDenseOracle) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.dt = 0.05;
  cfg.max_layers = 40;
  const RunTrace t = run_fqa(f.problem, f.driver.ground_state, cfg);
  expect_matches_oracle(
      t, testing::dense_fqa(f.problem, f.driver.ground_state, cfg.dt, 40), 1e-11);
  EXPECT_EQ(t.algorithm, "fqa");
  EXPECT_EQ(t.diagnostics.halted_reason, "max_layers");
  // psi_0 is a driver eigenstate, so the first applied beta vanishes.
  EXPECT_NEAR(t.records.front().beta[0], 0.0, 1e-12);
}

TEST(RunFqa, GenericPairMatchesDenseOracle) {
  std::mt19937_64 rng(31);
  const PauliSum hp = testing::random_pauli_sum(rng, 4, 8, true, true, true);
  const PauliSum hd = testing::random_pauli_sum(rng, 4, 5, true, false, true);
  const FqaProblem p = generic_problem(hp, hd);
  EXPECT_GT(p.problem_factors.size(), 1u);
  const StateVector psi0 = testing::random_state(rng, 4);
  FqaConfig cfg;
  cfg.dt = 0.03;
  cfg.max_layers = 25;
  expect_matches_oracle(run_fqa(p, psi0, cfg),
                        testing::dense_fqa(p, psi0, cfg.dt, 25), 1e-11);
}

TEST(RunFqa, RecordsOverlapAgainstGroundSpace) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 5;
  cfg.record_overlap = true;
  const RunTrace t = run_fqa(f.problem, f.driver.ground_state, cfg, &f.ground);
  ASSERT_TRUE(t.initial->overlap.has_value());
  EXPECT_NEAR(*t.initial->overlap,
              f.ground.ground_space_overlap(f.driver.ground_state), 1e-14);
  EXPECT_EQ(t.overlap_series().size(), 6u);
}

TEST(RunFqa, ExactProblemEvolutionMatchesDenseExponential) {
  HubbardFixture f;
  f.problem.exact_problem_evolution = true;
  FqaProblem dense = f.problem;
  dense.problem_factors = {simplify(f.problem.problem).without_identity()};
  FqaConfig cfg;
  cfg.dt = 0.05;
  cfg.max_layers = 20;
  // One factor holding all of H_p is exponentiated exactly by the oracle.
  expect_matches_oracle(run_fqa(f.problem, f.driver.ground_state, cfg),
                        testing::dense_fqa(dense, f.driver.ground_state, cfg.dt,
                                           20),
                        1e-10);
}

TEST(RunFqa, StopsWhenFeedbackVanishes) {
  // The ground state is a fixed point once U_p is exact.
  HubbardFixture f;
  f.problem.exact_problem_evolution = true;
  FqaConfig cfg;
  cfg.max_layers = 50;
  cfg.stop_epsilon = 1e-9;
  const RunTrace t = run_fqa(f.problem, f.ground.ground_state, cfg);
  EXPECT_EQ(t.diagnostics.halted_reason, "converged");
  EXPECT_EQ(t.records.size(), 1u);
}

TEST(RunFqa, ReferenceFieldOffsetsBeta) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 10;
  cfg.reference_field = ReferenceField{0.5, 0};
  const RunTrace t = run_fqa(f.problem, f.driver.ground_state, cfg);
  EXPECT_EQ(t.algorithm, "fqa_reference_field");
  for (const LayerRecord& r : t.records) {
    EXPECT_NEAR(r.beta[0] - r.beta_feedback[0], 0.5 * (1.0 - r.k / 10.0),
                1e-15);
  }
}

TEST(RunFqa, GainScalesFeedback) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 3;
  cfg.gain = 2.0;
  const RunTrace t = run_fqa(f.problem, f.driver.ground_state, cfg);
  for (std::size_t i = 1; i < t.records.size(); ++i) {
    EXPECT_NEAR(t.records[i].beta[0], -2.0 * t.records[i - 1].a_value[0], 1e-15);
  }
}

TEST(RunFqa, NoisyRunsAreSeedReproducible) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 10;
  cfg.noise = {NoiseKind::kEigenMultinomial, 20, 99};
  const RunTrace a = run_fqa(f.problem, f.driver.ground_state, cfg);
  const RunTrace b = run_fqa(f.problem, f.driver.ground_state, cfg);
  EXPECT_EQ(a.j_series(), b.j_series());
  ASSERT_EQ(a.records.back().a_exact.size(), 1u);
  cfg.noise.kind = NoiseKind::kGroupedPauli;
  const RunTrace g = run_fqa(f.problem, f.driver.ground_state, cfg);
  EXPECT_EQ(g.records.size(), 10u);
}

TEST(RunFqa, ValidatesInputs) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.dt = 0.0;
  EXPECT_THROW(run_fqa(f.problem, f.driver.ground_state, cfg),
               std::invalid_argument);
  cfg = {};
  cfg.record_overlap = true;
  EXPECT_THROW(run_fqa(f.problem, f.driver.ground_state, cfg),
               std::invalid_argument);
  EXPECT_THROW(run_fqa(f.problem, StateVector(3), FqaConfig{}),
               std::invalid_argument);
}

TEST(Multiparameter, SingleDriverFactorReducesToSingleParameter) {
  std::mt19937_64 rng(41);
  const PauliSum hp = testing::random_pauli_sum(rng, 3, 6, true, true, true);
  const PauliSum hd = testing::random_pauli_sum(rng, 3, 4, true, false, false);
  const FqaProblem p = generic_problem(hp, hd);
  ASSERT_EQ(p.driver_factors.size(), 1u);
  const StateVector psi0 = testing::random_state(rng, 3);
  FqaConfig cfg;
  cfg.dt = 0.04;
  cfg.max_layers = 15;
  const RunTrace single = run_fqa(p, psi0, cfg);
  cfg.mode = FqaMode::kMultiparameter;
  const RunTrace multi = run_fqa(p, psi0, cfg);
  EXPECT_EQ(multi.algorithm, "multiparameter");
  const auto js = single.j_series();
  const auto jm = multi.j_series();
  for (std::size_t k = 0; k < js.size(); ++k) EXPECT_NEAR(js[k], jm[k], 1e-12);
}

TEST(Multiparameter, HubbardComponentsFollowTheirOwnFeedback) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 8;
  cfg.mode = FqaMode::kMultiparameter;
  const RunTrace t = run_fqa(f.problem, f.driver.ground_state, cfg);
  EXPECT_EQ(t.beta_labels, (std::vector<std::string>{"h1", "v1", "h2", "v2"}));
  for (const LayerRecord& r : t.records) {
    ASSERT_EQ(r.beta.size(), 4u);
    // A single row and two columns: only h1 has bonds.
    EXPECT_EQ(r.beta[1], 0.0);
    EXPECT_EQ(r.beta[2], 0.0);
    EXPECT_EQ(r.beta[3], 0.0);
  }
}

TEST(Iterative, CarriesPreviousPassParameters) {
  HubbardFixture f;
  FqaConfig cfg;
  cfg.max_layers = 12;
  cfg.iterations = 3;
  const auto passes = run_iterative(f.problem, f.driver.ground_state, cfg);
  ASSERT_EQ(passes.size(), 3u);
  for (std::size_t r = 1; r < passes.size(); ++r) {
    for (std::size_t k = 0; k < 12; ++k) {
      const LayerRecord& rec = passes[r].records[k];
      EXPECT_NEAR(rec.beta[0],
                  rec.beta_feedback[0] + passes[r - 1].records[k].beta[0], 1e-15);
    }
  }
}

TEST(Anneal, LinearScheduleAndTrace) {
  const auto s = linear_schedule(4);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_DOUBLE_EQ(s.front().u, 0.75);
  EXPECT_DOUBLE_EQ(s.back().w, 1.0);
  EXPECT_DOUBLE_EQ(s.back().u, 0.0);
  HubbardFixture f;
  const RunTrace t =
      run_digitized_anneal(f.problem, f.driver.ground_state, s, 0.1, &f.ground);
  EXPECT_EQ(t.beta_labels, (std::vector<std::string>{"u", "w"}));
  EXPECT_EQ(t.records.size(), 4u);
  EXPECT_TRUE(t.records.back().overlap.has_value());
}

TEST(DtBound, UsesSpectralNorms) {
  PauliSum hp(1);
  hp.add(PauliString::parse("Z0", 1, 1.0));
  PauliSum hd(1);
  hd.add(PauliString::parse("X0", 1, 2.0));
  EXPECT_NEAR(dt_bound(hp, hd), 1.0 / 16.0, 1e-12);
  EXPECT_THROW(dt_bound(PauliSum(1), hd), std::invalid_argument);
}

TEST(GenericProblem, RejectsNonHermitianOperators) {
  PauliSum hp(1);
  hp.add(PauliString::parse("Z0", 1, Complex(0.0, 1.0)));
  PauliSum hd(1);
  hd.add(PauliString::parse("X0", 1));
  EXPECT_THROW(generic_problem(hp, hd), std::invalid_argument);
}

}  // namespace
}  // namespace fqa
