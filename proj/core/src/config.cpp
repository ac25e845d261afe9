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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace fqa {
namespace {

namespace pt = boost::property_tree;

ModelFamily parse_family(const std::string& s) {
  if (s == "hubbard") return ModelFamily::kHubbard;
  if (s == "molecular") return ModelFamily::kMolecular;
  throw std::invalid_argument("unknown model family '" + s + "'");
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "fqa") return Algorithm::kFqa;
  if (s == "multiparameter") return Algorithm::kMultiparameter;
  if (s == "iterative") return Algorithm::kIterative;
  if (s == "anneal") return Algorithm::kAnneal;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

// Like ptree::get with a default, but a present value that fails to parse
// is an error instead of silently falling back.
template <typename T>
T read(const pt::ptree& tree, const std::string& key, const T& fallback) {
  const auto child = tree.get_child_optional(key);
  if (!child) return fallback;
  const auto v = child->get_value_optional<T>();
  if (!v) {
    throw std::invalid_argument("config: bad value '" + child->data() +
                                "' for " + key);
  }
  return *v;
}

}  // namespace

std::string_view to_string(ModelFamily f) {
  return f == ModelFamily::kHubbard ? "hubbard" : "molecular";
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kFqa:
      return "fqa";
    case Algorithm::kMultiparameter:
      return "multiparameter";
    case Algorithm::kIterative:
      return "iterative";
    case Algorithm::kAnneal:
      return "anneal";
  }
  return "fqa";
}

void ExperimentConfig::validate() const {
  if (family == ModelFamily::kHubbard) {
    lattice.validate();
  } else if (!std::filesystem::exists(fcidump)) {
    throw std::invalid_argument("fcidump file not found: " +
                                fcidump.string());
  }
  fqa.validate();
  if (!sweep_parameter.empty() && sweep_parameter != "dt" &&
      sweep_parameter != "u") {
    throw std::invalid_argument("sweep parameter must be dt or u");
  }
  if (sweep_parameter == "u" && family != ModelFamily::kHubbard) {
    throw std::invalid_argument("u sweeps need a hubbard model");
  }
}

ExperimentConfig parse_config(std::istream& in,
                              const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.family = parse_family(tree.get<std::string>("model.family", "hubbard"));
    LatticeSpec& l = cfg.lattice;
    l.n_rows = read(tree, "model.rows", l.n_rows);
    l.n_cols = read(tree, "model.cols", l.n_cols);
    l.tau = read(tree, "model.tau", l.tau);
    l.u = read(tree, "model.u", l.u);
    l.n_up = read(tree, "model.n_up", l.n_up);
    l.n_down = read(tree, "model.n_down", l.n_down);
    if (const auto path = tree.get_optional<std::string>("model.fcidump")) {
      cfg.fcidump = *path;
      if (cfg.fcidump.is_relative()) cfg.fcidump = base_dir / cfg.fcidump;
    }

    FqaConfig& f = cfg.fqa;
    cfg.algorithm = parse_algorithm(tree.get<std::string>("run.algorithm", "fqa"));
    f.mode = cfg.algorithm == Algorithm::kMultiparameter
                 ? FqaMode::kMultiparameter
                 : FqaMode::kSingle;
    f.dt = read(tree, "run.dt", f.dt);
    f.max_layers = read(tree, "run.layers", f.max_layers);
    f.gain = read(tree, "run.gain", f.gain);
    f.stop_epsilon = read(tree, "run.stop_epsilon", f.stop_epsilon);
    f.iterations = read(tree, "run.iterations", f.iterations);
    f.record_overlap = read(tree, "run.record_overlap", f.record_overlap);
    cfg.exact_problem_evolution =
        read(tree, "run.exact_problem_evolution", cfg.exact_problem_evolution);
    if (const auto amp = tree.get_optional<double>("run.reference_field")) {
      f.reference_field = ReferenceField{*amp,
                                         read(tree, "run.reference_layers", 0)};
    }
    f.noise.kind = parse_noise_kind(tree.get<std::string>("noise.kind", "ideal"));
    f.noise.m = read(tree, "noise.m", f.noise.m);
    f.noise.seed = read<std::uint64_t>(tree, "noise.seed", f.noise.seed);
    f.oscillation.window = read(tree, "oscillation.window", f.oscillation.window);
    f.oscillation.flip_threshold =
        read(tree, "oscillation.flip_threshold", f.oscillation.flip_threshold);
    f.oscillation.decay_ratio =
        read(tree, "oscillation.decay_ratio", f.oscillation.decay_ratio);
    f.oscillation.flat_tolerance =
        read(tree, "oscillation.flat_tolerance", f.oscillation.flat_tolerance);

    if (const auto out = tree.get_optional<std::string>("output.path")) {
      cfg.output = *out;
      if (cfg.output.is_relative()) cfg.output = base_dir / cfg.output;
    }
    cfg.format = parse_trace_format(tree.get<std::string>("output.format", "csv"));
    cfg.sweep_parameter = tree.get<std::string>("sweep.parameter", "");
    cfg.sweep_values = parse_list(tree.get<std::string>("sweep.values", ""));
  } catch (const pt::ptree_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

Metadata describe(const ExperimentConfig& cfg) {
  Metadata m;
  auto put = [&](std::string key, const auto& value) {
    std::ostringstream s;
    s << value;
    m.emplace_back(std::move(key), s.str());
  };
  put("family", to_string(cfg.family));
  if (cfg.family == ModelFamily::kHubbard) {
    const LatticeSpec& l = cfg.lattice;
    put("lattice", std::to_string(l.n_rows) + "x" + std::to_string(l.n_cols));
    put("tau", format_double(l.tau));
    put("u", format_double(l.u));
    put("n_up", l.n_up);
    put("n_down", l.n_down);
  } else {
    put("fcidump", cfg.fcidump.filename().string());
  }
  const FqaConfig& f = cfg.fqa;
  put("algorithm", to_string(cfg.algorithm));
  put("dt", format_double(f.dt));
  put("layers", f.max_layers);
  put("gain", format_double(f.gain));
  put("stop_epsilon", format_double(f.stop_epsilon));
  put("iterations", f.iterations);
  put("exact_problem_evolution", cfg.exact_problem_evolution ? "1" : "0");
  if (f.reference_field) {
    put("reference_field", format_double(f.reference_field->amplitude));
    put("reference_layers", f.reference_field->total_layers);
  }
  put("noise", to_string(f.noise.kind));
  put("m", f.noise.m);
  put("seed", f.noise.seed);
  return m;
}

}  // namespace fqa
