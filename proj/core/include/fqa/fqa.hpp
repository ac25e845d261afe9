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

#include <optional>
#include <string>
#include <vector>

#include "fqa/eigensolver.hpp"
#include "fqa/hubbard.hpp"
#include "fqa/measurement.hpp"
#include "fqa/molecular.hpp"
#include "fqa/pauli.hpp"
#include "fqa/statevector.hpp"

namespace fqa {

/**
 * A problem/driver pair prepared for layered simulation.
 *
 * Factor lists are written in operator-product order, as in
 * U = e^{-i F_0 s} e^{-i F_1 s} ... e^{-i F_last s}; the last factor acts on
 * the state first. Every factor must be a mutually commuting sum without
 * identity terms.
 */
struct FqaProblem {
  int n_qubits = 0;
  PauliSum problem{1};   // H_p, used for J
  PauliSum driver{1};    // H_d
  PauliSum feedback{1};  // i[H_d, H_p]
  std::vector<PauliSum> problem_factors;
  std::vector<PauliSum> driver_factors;
  /// i[H_j, H_p] for each driver factor; used by the multiparameter run.
  std::vector<PauliSum> driver_feedback;
  std::vector<std::string> driver_labels;
  /// Optional measurement grouping of `feedback` for grouped noise.
  std::vector<PauliSum> feedback_groups;
  /// Constant added to reported J (nuclear repulsion).
  double energy_offset = 0.0;
  /// Apply U_p = e^{-i H_p dt} exactly instead of through problem_factors.
  bool exact_problem_evolution = false;
};

/// U_p = e^{-iV dt} e^{-iH_h1 dt} e^{-iH_v1 dt} e^{-iH_h2 dt} e^{-iH_v2 dt},
/// U_d(b) = e^{-ib H_h1 dt} e^{-ib H_v1 dt} e^{-ib H_h2 dt} e^{-ib H_v2 dt}.
FqaProblem hubbard_problem(const HubbardModel& model);

/// H_p = H_1 + H_2, H_d = H_1, factors from commuting partitions.
FqaProblem molecular_problem(const MolecularSystem& sys);

/// Arbitrary Hermitian pair; each sum is split into commuting factors.
FqaProblem generic_problem(const PauliSum& h_p, const PauliSum& h_d);

enum class FqaMode { kSingle, kMultiparameter };

struct ReferenceField {
  double amplitude = 0.5;
  /// Ramp length; 0 means the run's max_layers.
  int total_layers = 0;

  /// lambda_0 (1 - k / l).
  double offset(int k, int default_layers) const;
};

struct OscillationConfig {
  int window = 20;
  double flip_threshold = 0.5;
  /// Envelope counts as decaying when the later half of the window peaks
  /// below this fraction of the earlier half.
  double decay_ratio = 0.5;
  /// Steps below this fraction of the window's max|beta| count as flat.
  double flat_tolerance = 1e-9;
};

struct FqaConfig {
  double dt = 0.01;
  int max_layers = 100;
  double stop_epsilon = 0.0;
  double gain = 1.0;
  FqaMode mode = FqaMode::kSingle;
  std::optional<ReferenceField> reference_field;
  int iterations = 1;
  NoiseModel noise;
  bool record_overlap = false;
  OscillationConfig oscillation;

  void validate() const;
};

struct LayerRecord {
  int k = 0;
  /// Applied parameter(s); one entry in single mode, one per driver factor
  /// in multiparameter mode.
  std::vector<double> beta;
  /// Pure feedback value before any reference-field or iterative offset.
  std::vector<double> beta_feedback;
  /// Estimated A_k (noisy when a noise model is active).
  std::vector<double> a_value;
  /// Exact A_k, kept only for noisy runs.
  std::vector<double> a_exact;
  double j_value = 0.0;
  std::optional<double> overlap;
};

struct OscillationReport {
  bool flagged = false;
  double flip_rate = 0.0;
  /// max|beta| in the later half of the window over the earlier half.
  double envelope_ratio = 0.0;
};

struct TraceDiagnostics {
  OscillationReport oscillation;
  /// Increases J_k > J_{k-1} + 1e-10 for k >= 2. The first layer is
  /// excluded: with A_0 = 0 it is pure (possibly Trotterized) H_p evolution.
  int monotone_violations = 0;
  std::string halted_reason;
};

struct RunTrace {
  std::string algorithm;
  FqaConfig config;
  std::vector<std::string> beta_labels;
  /// Layer 0: psi_0 with A_0 and J_0; unset only for an empty trace.
  std::optional<LayerRecord> initial;
  /// Layers 1..l in order.
  std::vector<LayerRecord> records;
  StateVector final_state{1};
  TraceDiagnostics diagnostics;

  /// J_0, J_1, ..., J_l.
  std::vector<double> j_series() const;
  /// beta component `index` for layers 1..l.
  std::vector<double> beta_series(std::size_t index = 0) const;
  std::vector<double> overlap_series() const;
};

/// 1 / (4 |H_p| |H_d|^2) with spectral norms; zero operators throw.
double dt_bound(const PauliSum& h_p, const PauliSum& h_d);

/**
 * Single-parameter feedback run: beta_k = -w A_{k-1} (plus a reference-field
 * ramp if configured), psi_k = U_d(beta_k) U_p psi_{k-1}. `ground` supplies
 * the overlap oracle when cfg.record_overlap is set.
 */
RunTrace run_fqa(const FqaProblem& problem, const StateVector& psi0,
                 const FqaConfig& cfg, const EigenResult* ground = nullptr);

/// One parameter per driver factor, each fed back from i[H_j, H_p].
RunTrace run_fqa_multiparameter(const FqaProblem& problem,
                                const StateVector& psi0, const FqaConfig& cfg,
                                const EigenResult* ground = nullptr);

/**
 * cfg.iterations passes. Pass r applies gamma_k = gamma_k^{(r-1)} - w A_{k-1}
 * with A measured along pass r's own states; pass 1 is a plain run.
 */
std::vector<RunTrace> run_iterative(const FqaProblem& problem,
                                    const StateVector& psi0,
                                    const FqaConfig& cfg,
                                    const EigenResult* ground = nullptr);

struct AnnealStep {
  double u = 0.0;  // driver weight
  double w = 1.0;  // problem weight
};

/// u_k = 1 - k/l, w_k = k/l for k = 1..l.
std::vector<AnnealStep> linear_schedule(int layers);

/// Preset-schedule baseline: psi_k = U_d(u_k) U_p(w_k) psi_{k-1}.
RunTrace run_digitized_anneal(const FqaProblem& problem,
                              const StateVector& psi0,
                              const std::vector<AnnealStep>& schedule,
                              double dt, const EigenResult* ground = nullptr);

// Diagnostics.

/// Sign-flip rate of successive beta differences over the trailing window.
OscillationReport detect_oscillation(const std::vector<double>& beta,
                                     const OscillationConfig& cfg = {});
/// Flags if any beta component oscillates.
OscillationReport detect_oscillation(const RunTrace& trace,
                                     const OscillationConfig& cfg);

/// Count of k with J_k > J_{k-1} + tol.
int monotone_violations(const std::vector<double>& j, double tol = 1e-10);

/// Dominant frequency of a mean-removed series, in cycles per sample.
double dominant_frequency(const std::vector<double>& series);

}  // namespace fqa
