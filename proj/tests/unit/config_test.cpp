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

#include "fqa/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "fqa/experiment.hpp"

namespace fqa {
namespace {

const std::filesystem::path kSource = FQA_SOURCE_DIR;

ExperimentConfig parse(const std::string& text,
                       const std::filesystem::path& base = {}) {
  std::istringstream in(text);
  return parse_config(in, base);
}

TEST(Config, ParsesEverySection) {
  const ExperimentConfig c = parse(R"(
[model]
family = hubbard
rows = 2
cols = 3
tau = 1.5
u = 4
n_up = 2
n_down = 1

[run]
algorithm = multiparameter
dt = 0.02
layers = 30
gain = 0.5
stop_epsilon = 1e-6
record_overlap = true
exact_problem_evolution = true
reference_field = 0.25
reference_layers = 60

[noise]
kind = grouped_pauli
m = 12
seed = 5

[oscillation]
window = 10
flip_threshold = 0.6
decay_ratio = 0.4
flat_tolerance = 1e-8

[output]
path = out/trace.json
format = json

[sweep]
parameter = u
values = 1, 2.5, 4
)",
                                   "/base");
  EXPECT_EQ(c.lattice.n_rows, 2);
  EXPECT_EQ(c.lattice.n_cols, 3);
  EXPECT_EQ(c.lattice.tau, 1.5);
  EXPECT_EQ(c.algorithm, Algorithm::kMultiparameter);
  EXPECT_EQ(c.fqa.mode, FqaMode::kMultiparameter);
  EXPECT_EQ(c.fqa.max_layers, 30);
  EXPECT_EQ(c.fqa.gain, 0.5);
  EXPECT_TRUE(c.fqa.record_overlap);
  EXPECT_TRUE(c.exact_problem_evolution);
  ASSERT_TRUE(c.fqa.reference_field.has_value());
  EXPECT_EQ(c.fqa.reference_field->total_layers, 60);
  EXPECT_EQ(c.fqa.noise.kind, NoiseKind::kGroupedPauli);
  EXPECT_EQ(c.fqa.noise.m, 12);
  EXPECT_EQ(c.fqa.noise.seed, 5u);
  EXPECT_EQ(c.fqa.oscillation.window, 10);
  EXPECT_EQ(c.fqa.oscillation.flat_tolerance, 1e-8);
  EXPECT_EQ(c.output, std::filesystem::path("/base/out/trace.json"));
  EXPECT_EQ(c.format, TraceFormat::kJson);
  EXPECT_EQ(c.sweep_parameter, "u");
  EXPECT_EQ(c.sweep_values, (std::vector<double>{1.0, 2.5, 4.0}));
}

TEST(Config, RejectsInvalidSettings) {
  EXPECT_THROW(parse("[model]\nfamily = lattice\n"), std::invalid_argument);
  EXPECT_THROW(parse("[run]\nalgorithm = qaoa\n"), std::invalid_argument);
  EXPECT_THROW(parse("[run]\ndt = -1\n"), std::invalid_argument);
  EXPECT_THROW(parse("[run]\nlayers = many\n"), std::invalid_argument);
  EXPECT_THROW(parse("[noise]\nkind = grouped_pauli\nm = 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("[sweep]\nparameter = tau\nvalues = 1\n"),
               std::invalid_argument);
  EXPECT_THROW(parse("[model]\nfamily = molecular\nfcidump = missing.fcidump\n"),
               std::invalid_argument);
  EXPECT_THROW(parse("[model\n"), std::invalid_argument);
}

TEST(Config, ShippedConfigsLoad) {
  for (const auto& entry :
       std::filesystem::directory_iterator(kSource / "configs")) {
    if (entry.path().extension() != ".ini") continue;
    EXPECT_NO_THROW(load_config(entry.path())) << entry.path();
  }
}

TEST(Config, DescribeEchoesSettings) {
  const ExperimentConfig c = load_config(kSource / "configs" / "hubbard_sampling_noise.ini");
  const Metadata m = describe(c);
  auto value = [&](const std::string& key) {
    for (const auto& [k, v] : m) {
      if (k == key) return v;
    }
    return std::string("<missing>");
  };
  EXPECT_EQ(value("lattice"), "1x4");
  EXPECT_EQ(value("noise"), "eigen_multinomial");
  EXPECT_EQ(value("m"), "50");
}

TEST(Experiment, RunWritesTraceWithMetadata) {
  ExperimentConfig c = load_config(kSource / "tests" / "data" / "smoke_1x2.ini");
  const auto dir = std::filesystem::temp_directory_path() / "fqa_experiment_test";
  c.output = dir / "run.csv";
  const ExperimentResult r = run_experiment(c, nullptr);
  ASSERT_EQ(r.outputs.size(), 1u);
  EXPECT_TRUE(std::filesystem::exists(r.outputs[0]));
  bool has_ground = false;
  for (const auto& [k, v] : r.metadata) has_ground |= k == "ground_energy";
  EXPECT_TRUE(has_ground);
  std::filesystem::remove_all(dir);
}

TEST(Experiment, SweepProducesOnePointPerValue) {
  ExperimentConfig c = load_config(kSource / "tests" / "data" / "smoke_1x2.ini");
  c.sweep_parameter = "dt";
  c.sweep_values = {0.01, 0.02};
  c.fqa.max_layers = 10;
  const auto points = run_sweep(c, 1, nullptr);
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[1].value, 0.02);
}

}  // namespace
}  // namespace fqa
