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
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fqa/fqa.hpp"
#include "fqa/hubbard.hpp"
#include "fqa/trace_io.hpp"

namespace fqa {

enum class ModelFamily { kHubbard, kMolecular };
enum class Algorithm { kFqa, kMultiparameter, kIterative, kAnneal };

std::string_view to_string(ModelFamily f);
std::string_view to_string(Algorithm a);

/**
 * One experiment, read from an INI file:
 *
 *   [model]   family, rows, cols, tau, u, n_up, n_down | fcidump
 *   [run]     algorithm, dt, layers, gain, stop_epsilon, iterations,
 *             reference_field, reference_layers, record_overlap,
 *             exact_problem_evolution
 *   [noise]   kind, m, seed
 *   [oscillation] window, flip_threshold, decay_ratio
 *   [output]  path, format
 *   [sweep]   parameter (dt | u), values (comma separated)
 */
struct ExperimentConfig {
  ModelFamily family = ModelFamily::kHubbard;
  LatticeSpec lattice;
  std::filesystem::path fcidump;
  Algorithm algorithm = Algorithm::kFqa;
  FqaConfig fqa;
  /// U_p as one exact exponential rather than the factor product.
  bool exact_problem_evolution = false;
  std::filesystem::path output;
  TraceFormat format = TraceFormat::kCsv;
  std::string sweep_parameter;
  std::vector<double> sweep_values;

  /// Throws std::invalid_argument on out-of-range values or missing files.
  void validate() const;
};

/// Relative paths in the file resolve against `base_dir`.
ExperimentConfig parse_config(std::istream& in,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Key/value echo of a config for trace metadata.
Metadata describe(const ExperimentConfig& cfg);

}  // namespace fqa
