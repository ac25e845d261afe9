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

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fqa/config.hpp"
#include "fqa/experiment.hpp"
#include "fqa/fcidump.hpp"
#include "fqa/hubbard.hpp"
#include "fqa/measurement.hpp"
#include "fqa/molecular.hpp"

namespace {

struct RunOptions {
  std::string config;
  std::string output;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::optional<int> layers;
};

fqa::ExperimentConfig load(const RunOptions& o) {
  fqa::ExperimentConfig cfg = fqa::load_config(o.config);
  if (!o.output.empty()) cfg.output = o.output;
  if (!o.format.empty()) cfg.format = fqa::parse_trace_format(o.format);
  if (o.seed) cfg.fqa.noise.seed = *o.seed;
  if (o.layers) cfg.fqa.max_layers = *o.layers;
  return cfg;
}

void summarize(const fqa::ExperimentResult& res) {
  const fqa::RunTrace& t = res.traces.back();
  const auto j = t.j_series();
  const auto ov = t.overlap_series();
  std::string ground;
  for (const auto& [k, v] : res.metadata) {
    if (k == "ground_energy") ground = v;
  }
  std::printf("layers = %zu, J_final = %.12f, E_0 = %s", t.records.size(),
              j.back(), ground.c_str());
  if (!ov.empty()) std::printf(", overlap = %.6f", ov.back());
  std::printf(", monotone_violations = %d, oscillation = %s\n",
              t.diagnostics.monotone_violations,
              t.diagnostics.oscillation.flagged ? "yes" : "no");
}

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("config", o.config, "Experiment INI file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", o.output, "Trace output path");
  cmd->add_option("-f,--format", o.format, "csv or json");
  cmd->add_option("--seed", o.seed, "Noise seed");
}

int cost_hubbard(int rows, int cols, int m) {
  fqa::LatticeSpec spec;
  spec.n_rows = rows;
  spec.n_cols = cols;
  spec.u = 1.0;
  const fqa::HubbardModel model = fqa::build_hubbard(spec);
  const fqa::MeasurementPlan plan = fqa::plan_fh(model, m);
  std::printf("circuits ≤ %d, strings = %zu\n", 4 * cols + 6,
              model.feedback_obs.size());
  std::printf("groups = %d, samples = %lld (m = %d)\n", plan.circuit_count,
              plan.total_samples(), m);
  return 0;
}

int cost_molecular(int n, const std::string& fcidump, int m) {
  if (!fcidump.empty()) {
    const fqa::MolecularSystem sys =
        fqa::build_molecular(fqa::parse_fcidump(fcidump));
    n = sys.n_spin_orbitals;
    const fqa::MeasurementPlan plan = fqa::plan_molecular_grouping(sys, m);
    std::printf("strings = %zu, greedy groups = %d\n", sys.feedback_obs.size(),
                plan.circuit_count);
  }
  const fqa::MolecularCost cost = fqa::plan_molecular(n, m);
  std::printf("n = %d, group bound = %lld, samples = %lld (m = %d)\n", n,
              cost.group_count, cost.total_samples, m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feedback-based ground-state preparation simulator"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Run one experiment");
  add_run_options(run, run_opts);

  RunOptions sweep_opts;
  int threads = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Grid over dt or u");
  add_run_options(sweep, sweep_opts);
  sweep->add_option("-j,--threads", threads,
                    "Worker threads (default FQA_THREADS or 1)");

  RunOptions anneal_opts;
  CLI::App* anneal =
      app.add_subcommand("anneal", "Linear-ramp digitized anneal baseline");
  add_run_options(anneal, anneal_opts);
  anneal->add_option("-l,--layers", anneal_opts.layers, "Number of layers");

  std::string family;
  int rows = 1, cols = 2, n = 4, m = 1;
  std::string fcidump;
  CLI::App* cost = app.add_subcommand("cost", "Measurement-cost report");
  cost->add_option("family", family, "hubbard or molecular")
      ->required()
      ->check(CLI::IsMember({"hubbard", "molecular"}));
  cost->add_option("--rows", rows, "Lattice rows")->check(CLI::PositiveNumber);
  cost->add_option("--cols", cols, "Lattice columns")
      ->check(CLI::PositiveNumber);
  cost->add_option("-n,--qubits", n, "Spin orbitals");
  cost->add_option("--fcidump", fcidump, "Integral file")
      ->check(CLI::ExistingFile);
  cost->add_option("-m,--samples", m, "Samples per circuit")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      summarize(fqa::run_experiment(load(run_opts), &std::cerr));
    } else if (*anneal) {
      fqa::ExperimentConfig cfg = load(anneal_opts);
      cfg.algorithm = fqa::Algorithm::kAnneal;
      summarize(fqa::run_experiment(cfg, &std::cerr));
    } else if (*sweep) {
      const fqa::ExperimentConfig cfg = load(sweep_opts);
      for (const fqa::SweepPoint& p : fqa::run_sweep(cfg, threads, &std::cerr)) {
        std::printf(
            "%s = %g: J_final = %.12f, overlap = %.6f, max|beta| = %.6f, "
            "oscillation = %s, monotone_violations = %d\n",
            cfg.sweep_parameter.c_str(), p.value, p.final_j, p.final_overlap,
            p.max_abs_beta, p.oscillation ? "yes" : "no",
            p.monotone_violations);
      }
    } else if (*cost) {
      return family == "hubbard" ? cost_hubbard(rows, cols, m)
                                 : cost_molecular(n, fcidump, m);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
