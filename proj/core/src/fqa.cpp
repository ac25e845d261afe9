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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace fqa {
namespace {

std::vector<PauliSum> commuting_factors(const PauliSum& h) {
  return partition_commuting(simplify(h).without_identity());
}

void check_factors(const std::vector<PauliSum>& factors, int n_qubits) {
  for (const PauliSum& f : factors) {
    if (f.n_qubits() != n_qubits) {
      throw std::invalid_argument("FqaProblem: factor width mismatch");
    }
    if (!mutually_commuting(f)) {
      throw std::invalid_argument("FqaProblem: factor is not commuting");
    }
  }
}

void validate_problem(const FqaProblem& p, const StateVector& psi0) {
  if (psi0.n_qubits() != p.n_qubits || p.problem.n_qubits() != p.n_qubits ||
      p.feedback.n_qubits() != p.n_qubits) {
    throw std::invalid_argument("run: register width mismatch");
  }
  check_factors(p.problem_factors, p.n_qubits);
  check_factors(p.driver_factors, p.n_qubits);
}

// Applies factors in operator-product order: the last one acts first.
void apply_factors(StateVector& state, const std::vector<PauliSum>& factors,
                   const std::vector<double>& scales) {
  for (std::size_t i = factors.size(); i-- > 0;) {
    apply_group_exponential(state, factors[i], scales[i], false);
  }
}

void apply_factors(StateVector& state, const std::vector<PauliSum>& factors,
                   double scale) {
  apply_factors(state, factors, std::vector<double>(factors.size(), scale));
}

// U_p(scale): the factor product, or exact evolution when requested.
class ProblemPropagator {
 public:
  explicit ProblemPropagator(const FqaProblem& p) : factors_(p.problem_factors) {
    if (p.exact_problem_evolution) {
      exact_.emplace(simplify(p.problem).without_identity());
    }
  }

  void apply(StateVector& state, double scale) const {
    if (exact_) {
      apply_evolution(state, *exact_, scale);
    } else {
      apply_factors(state, factors_, scale);
    }
  }

 private:
  const std::vector<PauliSum>& factors_;
  std::optional<CompiledObservable> exact_;
};

void require_finite(double beta, int k) {
  if (!std::isfinite(beta)) {
    throw std::runtime_error("non-finite beta at layer " + std::to_string(k));
  }
}

// Fills J and overlap for a state.
class Observer {
 public:
  Observer(const FqaProblem& p, const FqaConfig& cfg, const EigenResult* g)
      : energy_(p.problem), offset_(p.energy_offset), ground_(g) {
    if (cfg.record_overlap && ground_ == nullptr) {
      throw std::invalid_argument("record_overlap requires a ground state");
    }
    if (!cfg.record_overlap) ground_ = nullptr;
  }

  void observe(const StateVector& s, LayerRecord& rec) const {
    rec.j_value = energy_.expectation(s) + offset_;
    if (ground_) rec.overlap = ground_->ground_space_overlap(s);
  }

 private:
  CompiledObservable energy_;
  double offset_;
  const EigenResult* ground_;
};

int layer_violations(const RunTrace& trace) {
  std::vector<double> j;
  for (const LayerRecord& r : trace.records) j.push_back(r.j_value);
  return monotone_violations(j);
}

void finish(RunTrace& trace) {
  trace.diagnostics.monotone_violations = layer_violations(trace);
  trace.diagnostics.oscillation =
      detect_oscillation(trace, trace.config.oscillation);
}

// Shared single-parameter loop. `carried` holds the previous pass's applied
// parameters (iterative method), or is empty.
RunTrace run_single(const FqaProblem& problem, const StateVector& psi0,
                    const FqaConfig& cfg, const EigenResult* ground,
                    int iteration, const std::vector<double>& carried,
                    std::string algorithm) {
  cfg.validate();
  validate_problem(problem, psi0);
  const FeedbackEstimator estimator(problem.feedback, cfg.noise,
                                    problem.feedback_groups);
  const Observer observer(problem, cfg, ground);
  const ProblemPropagator propagate(problem);
  const bool noisy = cfg.noise.kind != NoiseKind::kIdeal;
  const auto r = static_cast<std::uint32_t>(iteration);

  RunTrace trace;
  trace.algorithm = std::move(algorithm);
  trace.config = cfg;
  trace.beta_labels = {"beta"};
  StateVector state = psi0;

  auto measure = [&](int k, LayerRecord& rec) {
    const double a =
        estimator.estimate(state, {static_cast<std::uint32_t>(k), r, 0});
    rec.a_value = {a};
    if (noisy) rec.a_exact = {estimator.exact(state)};
    observer.observe(state, rec);
    return a;
  };

  double a_prev = measure(0, trace.initial.emplace());
  trace.diagnostics.halted_reason = "max_layers";
  for (int k = 1; k <= cfg.max_layers; ++k) {
    const double feedback = -cfg.gain * a_prev;
    double beta = feedback;
    if (cfg.reference_field) {
      beta += cfg.reference_field->offset(k, cfg.max_layers);
    }
    if (static_cast<std::size_t>(k) <= carried.size()) {
      beta += carried[static_cast<std::size_t>(k - 1)];
    }
    require_finite(beta, k);
    propagate.apply(state, cfg.dt);
    apply_factors(state, problem.driver_factors, beta * cfg.dt);

    LayerRecord rec;
    rec.k = k;
    rec.beta = {beta};
    rec.beta_feedback = {feedback};
    a_prev = measure(k, rec);
    trace.records.push_back(std::move(rec));
    if (cfg.stop_epsilon > 0.0 && std::abs(a_prev) <= cfg.stop_epsilon) {
      trace.diagnostics.halted_reason = "converged";
      break;
    }
  }
  trace.final_state = std::move(state);
  finish(trace);
  return trace;
}

}  // namespace

FqaProblem hubbard_problem(const HubbardModel& model) {
  FqaProblem p;
  p.n_qubits = model.spec.n_qubits();
  p.problem = model.full;
  p.driver = model.t_sum;
  p.feedback = model.feedback_obs;
  p.problem_factors.push_back(simplify(model.v_sum).without_identity());
  for (const PauliSum* g : model.hopping_groups()) {
    p.problem_factors.push_back(*g);
    p.driver_factors.push_back(*g);
    PauliSum fb = commutator(*g, model.full);
    fb *= Complex(0.0, 1.0);
    p.driver_feedback.push_back(simplify(fb));
  }
  p.driver_labels = {"h1", "v1", "h2", "v2"};
  p.feedback_groups = plan_fh(model, 1).groups;
  return p;
}

FqaProblem molecular_problem(const MolecularSystem& sys) {
  FqaProblem p = generic_problem(sys.full, sys.h1_sum);
  p.feedback = sys.feedback_obs;
  p.energy_offset = sys.e_nuclear;
  return p;
}

FqaProblem generic_problem(const PauliSum& h_p, const PauliSum& h_d) {
  if (h_p.n_qubits() != h_d.n_qubits()) {
    throw std::invalid_argument("generic_problem: width mismatch");
  }
  if (!h_p.is_hermitian() || !h_d.is_hermitian()) {
    throw std::invalid_argument("generic_problem: operators must be Hermitian");
  }
  FqaProblem p;
  p.n_qubits = h_p.n_qubits();
  p.problem = simplify(h_p);
  p.driver = simplify(h_d);
  PauliSum fb = commutator(p.driver, p.problem);
  fb *= Complex(0.0, 1.0);
  p.feedback = simplify(fb);
  p.problem_factors = commuting_factors(p.problem);
  p.driver_factors = commuting_factors(p.driver);
  for (std::size_t j = 0; j < p.driver_factors.size(); ++j) {
    PauliSum fj = commutator(p.driver_factors[j], p.problem);
    fj *= Complex(0.0, 1.0);
    p.driver_feedback.push_back(simplify(fj));
    p.driver_labels.push_back("d" + std::to_string(j));
  }
  return p;
}

double ReferenceField::offset(int k, int default_layers) const {
  const int l = total_layers > 0 ? total_layers : default_layers;
  if (l < 1) throw std::invalid_argument("reference field: l must be >= 1");
  return amplitude * (1.0 - static_cast<double>(k) / l);
}

void FqaConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("FqaConfig: dt must be positive");
  }
  if (max_layers < 0) {
    throw std::invalid_argument("FqaConfig: max_layers must be >= 0");
  }
  if (!(gain > 0.0)) throw std::invalid_argument("FqaConfig: gain must be > 0");
  if (stop_epsilon < 0.0) {
    throw std::invalid_argument("FqaConfig: stop_epsilon must be >= 0");
  }
  if (iterations < 1) {
    throw std::invalid_argument("FqaConfig: iterations must be >= 1");
  }
  if (oscillation.window < 4) {
    throw std::invalid_argument("FqaConfig: oscillation window must be >= 4");
  }
  noise.validate();
}

std::vector<double> RunTrace::j_series() const {
  std::vector<double> out;
  if (initial) out.push_back(initial->j_value);
  for (const LayerRecord& r : records) out.push_back(r.j_value);
  return out;
}

std::vector<double> RunTrace::beta_series(std::size_t index) const {
  std::vector<double> out;
  for (const LayerRecord& r : records) {
    out.push_back(index < r.beta.size() ? r.beta[index] : 0.0);
  }
  return out;
}

std::vector<double> RunTrace::overlap_series() const {
  std::vector<double> out;
  if (initial && initial->overlap) out.push_back(*initial->overlap);
  for (const LayerRecord& r : records) {
    if (r.overlap) out.push_back(*r.overlap);
  }
  return out;
}

double dt_bound(const PauliSum& h_p, const PauliSum& h_d) {
  const double np = spectral_norm(h_p);
  const double nd = spectral_norm(h_d);
  if (np == 0.0 || nd == 0.0) {
    throw std::invalid_argument("dt_bound: zero operator");
  }
  return 1.0 / (4.0 * np * nd * nd);
}

RunTrace run_fqa(const FqaProblem& problem, const StateVector& psi0,
                 const FqaConfig& cfg, const EigenResult* ground) {
  if (cfg.mode == FqaMode::kMultiparameter) {
    return run_fqa_multiparameter(problem, psi0, cfg, ground);
  }
  return run_single(problem, psi0, cfg, ground, 0, {},
                    cfg.reference_field ? "fqa_reference_field" : "fqa");
}

RunTrace run_fqa_multiparameter(const FqaProblem& problem,
                                const StateVector& psi0, const FqaConfig& cfg,
                                const EigenResult* ground) {
  cfg.validate();
  validate_problem(problem, psi0);
  const std::size_t n_drivers = problem.driver_factors.size();
  if (problem.driver_feedback.size() != n_drivers) {
    throw std::invalid_argument(
        "multiparameter: one feedback observable per driver factor needed");
  }
  std::vector<FeedbackEstimator> estimators;
  estimators.reserve(n_drivers);
  for (const PauliSum& obs : problem.driver_feedback) {
    estimators.emplace_back(obs, cfg.noise);
  }
  const Observer observer(problem, cfg, ground);
  const ProblemPropagator propagate(problem);
  const bool noisy = cfg.noise.kind != NoiseKind::kIdeal;

  RunTrace trace;
  trace.algorithm = "multiparameter";
  trace.config = cfg;
  trace.beta_labels = problem.driver_labels;
  StateVector state = psi0;

  auto measure = [&](int k, LayerRecord& rec) {
    rec.a_value.clear();
    rec.a_exact.clear();
    for (std::size_t j = 0; j < n_drivers; ++j) {
      rec.a_value.push_back(estimators[j].estimate(
          state, {static_cast<std::uint32_t>(k), 0,
                  static_cast<std::uint32_t>(j)}));
      if (noisy) rec.a_exact.push_back(estimators[j].exact(state));
    }
    observer.observe(state, rec);
  };

  measure(0, trace.initial.emplace());
  std::vector<double> a_prev = trace.initial->a_value;
  trace.diagnostics.halted_reason = "max_layers";
  for (int k = 1; k <= cfg.max_layers; ++k) {
    LayerRecord rec;
    rec.k = k;
    std::vector<double> scales(n_drivers);
    double largest = 0.0;
    for (std::size_t j = 0; j < n_drivers; ++j) {
      const double feedback = -cfg.gain * a_prev[j];
      double beta = feedback;
      if (cfg.reference_field) {
        beta += cfg.reference_field->offset(k, cfg.max_layers);
      }
      require_finite(beta, k);
      rec.beta.push_back(beta);
      rec.beta_feedback.push_back(feedback);
      scales[j] = beta * cfg.dt;
    }
    propagate.apply(state, cfg.dt);
    apply_factors(state, problem.driver_factors, scales);
    measure(k, rec);
    a_prev = rec.a_value;
    for (double a : a_prev) largest = std::max(largest, std::abs(a));
    trace.records.push_back(std::move(rec));
    if (cfg.stop_epsilon > 0.0 && largest <= cfg.stop_epsilon) {
      trace.diagnostics.halted_reason = "converged";
      break;
    }
  }
  trace.final_state = std::move(state);
  finish(trace);
  return trace;
}

std::vector<RunTrace> run_iterative(const FqaProblem& problem,
                                    const StateVector& psi0,
                                    const FqaConfig& cfg,
                                    const EigenResult* ground) {
  cfg.validate();
  std::vector<RunTrace> traces;
  std::vector<double> carried;
  for (int r = 0; r < cfg.iterations; ++r) {
    traces.push_back(
        run_single(problem, psi0, cfg, ground, r, carried, "iterative"));
    carried = traces.back().beta_series();
  }
  return traces;
}

std::vector<AnnealStep> linear_schedule(int layers) {
  if (layers < 0) throw std::invalid_argument("linear_schedule: layers < 0");
  std::vector<AnnealStep> out;
  for (int k = 1; k <= layers; ++k) {
    const double s = static_cast<double>(k) / layers;
    out.push_back({1.0 - s, s});
  }
  return out;
}

RunTrace run_digitized_anneal(const FqaProblem& problem,
                              const StateVector& psi0,
                              const std::vector<AnnealStep>& schedule,
                              double dt, const EigenResult* ground) {
  FqaConfig cfg;
  cfg.dt = dt;
  cfg.max_layers = static_cast<int>(schedule.size());
  cfg.record_overlap = ground != nullptr;
  cfg.validate();
  validate_problem(problem, psi0);
  const Observer observer(problem, cfg, ground);
  const ProblemPropagator propagate(problem);

  RunTrace trace;
  trace.algorithm = "anneal";
  trace.config = cfg;
  trace.beta_labels = {"u", "w"};
  StateVector state = psi0;
  observer.observe(state, trace.initial.emplace());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const AnnealStep& step = schedule[i];
    propagate.apply(state, step.w * dt);
    apply_factors(state, problem.driver_factors, step.u * dt);
    LayerRecord rec;
    rec.k = static_cast<int>(i) + 1;
    rec.beta = {step.u, step.w};
    observer.observe(state, rec);
    trace.records.push_back(std::move(rec));
  }
  trace.diagnostics.halted_reason = "schedule_end";
  trace.final_state = std::move(state);
  trace.diagnostics.monotone_violations = layer_violations(trace);
  return trace;
}

}  // namespace fqa
