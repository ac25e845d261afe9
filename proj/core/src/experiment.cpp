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

#include "fqa/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fqa/fcidump.hpp"
#include "fqa/hubbard.hpp"
#include "fqa/molecular.hpp"

namespace fqa {
namespace {

std::optional<long long> env_integer(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0') {
    throw std::invalid_argument(std::string(name) + " is not an integer");
  }
  return v;
}

std::filesystem::path with_suffix(const std::filesystem::path& p,
                                  const std::string& suffix) {
  std::filesystem::path out = p.parent_path() / p.stem();
  out += suffix;
  out += p.extension();
  return out;
}

void check_finite(const RunTrace& t) {
  for (double j : t.j_series()) {
    if (!std::isfinite(j)) throw std::runtime_error("non-finite energy");
  }
}

}  // namespace

PreparedProblem prepare_problem(const ExperimentConfig& cfg) {
  cfg.validate();
  PreparedProblem out;
  if (cfg.family == ModelFamily::kHubbard) {
    const HubbardModel model = build_hubbard(cfg.lattice);
    out.problem = hubbard_problem(model);
    out.sector = SectorSpec::spins(cfg.lattice.n_up, cfg.lattice.n_down);
  } else {
    const MolecularSystem sys = build_molecular(parse_fcidump(cfg.fcidump));
    out.problem = molecular_problem(sys);
    out.sector = SectorSpec::spins(sys.n_alpha, sys.n_beta);
  }
  out.problem.exact_problem_evolution = cfg.exact_problem_evolution;
  out.driver_ground = sector_ground_state(out.problem.driver, out.sector);
  out.problem_ground = sector_ground_state(out.problem.problem, out.sector);
  out.dt_bound = dt_bound(out.problem.problem, out.problem.driver);
  return out;
}

ExperimentResult run_experiment(ExperimentConfig cfg, std::ostream* log) {
  if (const auto seed = env_integer("FQA_SEED")) {
    cfg.fqa.noise.seed = static_cast<std::uint64_t>(*seed);
  }
  const PreparedProblem prep = prepare_problem(cfg);
  ExperimentResult result;
  result.metadata = describe(cfg);
  auto put = [&](std::string key, std::string value) {
    result.metadata.emplace_back(std::move(key), std::move(value));
  };
  put("n_qubits", std::to_string(prep.problem.n_qubits));
  put("dt_bound", format_double(prep.dt_bound));
  put("ground_energy",
      format_double(prep.problem_ground.ground_energy +
                    prep.problem.energy_offset));
  put("ground_degeneracy", std::to_string(prep.problem_ground.degeneracy));
  put("driver_degeneracy", std::to_string(prep.driver_ground.degeneracy));
  if (prep.driver_ground.degeneracy > 1) {
    put("degeneracy_note",
        "driver ground space is degenerate; lowest-index eigenvector used");
  }
  if (cfg.fqa.dt > 10.0 * prep.dt_bound) {
    std::ostringstream w;
    w << "dt = " << cfg.fqa.dt << " exceeds 10x the monotonicity bound "
      << prep.dt_bound;
    result.warnings.push_back(w.str());
    put("warning", w.str());
    if (log) *log << "warning: " << w.str() << '\n';
  }

  const StateVector& psi0 = prep.driver_ground.ground_state;
  const EigenResult* oracle = &prep.problem_ground;
  switch (cfg.algorithm) {
    case Algorithm::kFqa:
    case Algorithm::kMultiparameter:
      result.traces.push_back(run_fqa(prep.problem, psi0, cfg.fqa, oracle));
      break;
    case Algorithm::kIterative:
      result.traces = run_iterative(prep.problem, psi0, cfg.fqa, oracle);
      break;
    case Algorithm::kAnneal:
      result.traces.push_back(run_digitized_anneal(
          prep.problem, psi0, linear_schedule(cfg.fqa.max_layers), cfg.fqa.dt,
          cfg.fqa.record_overlap ? oracle : nullptr));
      break;
  }
  for (const RunTrace& t : result.traces) check_finite(t);

  const RunTrace& last = result.traces.back();
  put("halted_reason", last.diagnostics.halted_reason);
  put("monotone_violations",
      std::to_string(last.diagnostics.monotone_violations));
  put("oscillation_flag", last.diagnostics.oscillation.flagged ? "1" : "0");
  put("flip_rate", format_double(last.diagnostics.oscillation.flip_rate));

  if (!cfg.output.empty()) {
    if (cfg.output.has_parent_path()) {
      std::filesystem::create_directories(cfg.output.parent_path());
    }
    for (std::size_t r = 0; r + 1 < result.traces.size(); ++r) {
      Metadata meta = result.metadata;
      meta.emplace_back("pass", std::to_string(r + 1));
      const auto path = with_suffix(cfg.output, "_pass" + std::to_string(r + 1));
      write_trace(path, result.traces[r], cfg.format, meta);
      result.outputs.push_back(path);
    }
    write_trace(cfg.output, last, cfg.format, result.metadata);
    result.outputs.push_back(cfg.output);
    if (log) *log << "wrote " << cfg.output.string() << '\n';
  }
  return result;
}

std::vector<SweepPoint> run_sweep(const ExperimentConfig& cfg, int threads,
                                  std::ostream* log) {
  if (cfg.sweep_parameter.empty() || cfg.sweep_values.empty()) {
    throw std::invalid_argument("sweep: parameter and values are required");
  }
  if (threads <= 0) {
    threads = static_cast<int>(env_integer("FQA_THREADS").value_or(1));
  }
  threads = std::max(1, std::min<int>(threads,
                                      static_cast<int>(cfg.sweep_values.size())));

  const std::size_t n = cfg.sweep_values.size();
  std::vector<SweepPoint> points(n);
  std::vector<std::string> logs(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        ExperimentConfig c = cfg;
        const double v = cfg.sweep_values[i];
        if (cfg.sweep_parameter == "dt") {
          c.fqa.dt = v;
        } else {
          c.lattice.u = v;
        }
        if (!cfg.output.empty()) {
          char tag[64];
          std::snprintf(tag, sizeof(tag), "_%s%g", cfg.sweep_parameter.c_str(),
                        v);
          c.output = with_suffix(cfg.output, tag);
        }
        std::ostringstream local;
        const ExperimentResult res = run_experiment(c, &local);
        const RunTrace& t = res.traces.back();
        SweepPoint& p = points[i];
        p.value = v;
        p.final_j = t.j_series().back();
        const auto ov = t.overlap_series();
        p.final_overlap = ov.empty() ? std::nan("") : ov.back();
        for (double b : t.beta_series()) {
          p.max_abs_beta = std::max(p.max_abs_beta, std::abs(b));
        }
        p.oscillation = t.diagnostics.oscillation.flagged;
        p.monotone_violations = t.diagnostics.monotone_violations;
        p.output = c.output;
        logs[i] = local.str();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (log) *log << logs[i];
  }

  if (!cfg.output.empty()) {
    TraceTable summary;
    summary.metadata = describe(cfg);
    summary.metadata.emplace_back("sweep", cfg.sweep_parameter);
    summary.columns = {cfg.sweep_parameter, "final_j", "final_overlap",
                       "max_abs_beta", "oscillation", "monotone_violations"};
    for (const SweepPoint& p : points) {
      summary.rows.push_back({p.value, p.final_j, p.final_overlap,
                              p.max_abs_beta, p.oscillation ? 1.0 : 0.0,
                              static_cast<double>(p.monotone_violations)});
    }
    const auto path = with_suffix(cfg.output, "_summary");
    write_table(path, summary, cfg.format);
    if (log) *log << "wrote " << path.string() << '\n';
  }
  return points;
}

}  // namespace fqa
