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

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fqa/config.hpp"
#include "fqa/eigensolver.hpp"
#include "fqa/fqa.hpp"
#include "fqa/trace_io.hpp"

namespace fqa {

/// Model, sector, initial state and oracle for one configuration.
struct PreparedProblem {
  FqaProblem problem;
  SectorSpec sector;
  /// Driver ground state in the sector; its ground_state is psi_0.
  EigenResult driver_ground;
  /// Problem ground state in the sector.
  EigenResult problem_ground;
  double dt_bound = 0.0;
};

PreparedProblem prepare_problem(const ExperimentConfig& cfg);

struct ExperimentResult {
  Metadata metadata;
  /// One trace, or one per pass for the iterative method.
  std::vector<RunTrace> traces;
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> outputs;
};

/**
 * Builds the model, prepares psi_0, runs the configured algorithm and writes
 * the trace if an output path is set. FQA_SEED overrides the noise seed.
 * A step above 10x the bound is allowed but reported as a warning.
 */
ExperimentResult run_experiment(ExperimentConfig cfg, std::ostream* log);

struct SweepPoint {
  double value = 0.0;
  double final_j = 0.0;
  double final_overlap = 0.0;
  double max_abs_beta = 0.0;
  bool oscillation = false;
  int monotone_violations = 0;
  std::filesystem::path output;
};

/**
 * Runs cfg once per sweep value on `threads` workers (FQA_THREADS, else 1,
 * when `threads` is 0) and writes a summary table next to the output path.
 * Results come back in sweep order regardless of scheduling.
 */
std::vector<SweepPoint> run_sweep(const ExperimentConfig& cfg, int threads,
                                  std::ostream* log);

}  // namespace fqa
