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

#include <random>

#include <benchmark/benchmark.h>

#include "fqa/fqa.hpp"
#include "fqa/hubbard.hpp"
#include "fqa/measurement.hpp"
#include "fqa/statevector.hpp"

namespace fqa {
namespace {

LatticeSpec lattice(int cols) {
  LatticeSpec s;
  s.n_rows = 2;
  s.n_cols = cols;
  s.u = 4.0;
  s.n_up = 2;
  s.n_down = 2;
  return s;
}

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  StateVector s(n);
  for (std::size_t i = 0; i < s.dimension(); ++i) s[i] = Complex(g(rng), g(rng));
  s.normalize();
  return s;
}

void BM_PauliSumProduct(benchmark::State& st) {
  const HubbardModel m = build_hubbard(lattice(static_cast<int>(st.range(0))));
  for (auto _ : st) {
    benchmark::DoNotOptimize(commutator(m.t_sum, m.v_sum));
  }
}
BENCHMARK(BM_PauliSumProduct)->Arg(2)->Arg(3)->Arg(4);

void BM_HoppingGroupExponential(benchmark::State& st) {
  const HubbardModel m = build_hubbard(lattice(static_cast<int>(st.range(0))));
  StateVector s = random_state(m.spec.n_qubits(), 1);
  for (auto _ : st) {
    for (const PauliSum* g : m.hopping_groups()) {
      apply_group_exponential(s, *g, 0.01, false);
    }
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_HoppingGroupExponential)->Arg(2)->Arg(3)->Arg(4);

void BM_FeedbackExpectation(benchmark::State& st) {
  const HubbardModel m = build_hubbard(lattice(static_cast<int>(st.range(0))));
  const CompiledObservable obs(m.feedback_obs);
  const StateVector s = random_state(m.spec.n_qubits(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(obs.expectation(s));
}
BENCHMARK(BM_FeedbackExpectation)->Arg(2)->Arg(3)->Arg(4);

void BM_GroupedEstimate(benchmark::State& st) {
  const HubbardModel m = build_hubbard(lattice(3));
  const GroupedEstimator est(plan_fh(m, 100));
  const StateVector s = random_state(m.spec.n_qubits(), 3);
  const NoiseModel noise{NoiseKind::kGroupedPauli, 100, 7};
  std::uint32_t layer = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(est.estimate(s, noise, {0, layer++, 0}));
  }
}
BENCHMARK(BM_GroupedEstimate);

void BM_FqaLayer(benchmark::State& st) {
  const HubbardModel m = build_hubbard(lattice(static_cast<int>(st.range(0))));
  const FqaProblem p = hubbard_problem(m);
  const StateVector psi0 = random_state(m.spec.n_qubits(), 4);
  FqaConfig cfg;
  cfg.max_layers = 10;
  for (auto _ : st) benchmark::DoNotOptimize(run_fqa(p, psi0, cfg));
  st.SetItemsProcessed(st.iterations() * cfg.max_layers);
}
BENCHMARK(BM_FqaLayer)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fqa

BENCHMARK_MAIN();
