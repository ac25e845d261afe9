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

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "fqa/hubbard.hpp"
#include "fqa/molecular.hpp"
#include "fqa/pauli.hpp"
#include "fqa/rng.hpp"
#include "fqa/statevector.hpp"

namespace fqa {

enum class NoiseKind { kIdeal, kEigenMultinomial, kGroupedPauli };

std::string_view to_string(NoiseKind kind);
/// Accepts "ideal", "eigen_multinomial", "grouped_pauli".
NoiseKind parse_noise_kind(std::string_view name);

struct NoiseModel {
  NoiseKind kind = NoiseKind::kIdeal;
  int m = 1;  // shots per estimate (per group for grouped_pauli)
  std::uint64_t seed = 0;

  void validate() const;
};

struct MeasurementPlan {
  std::vector<PauliSum> groups;
  int circuit_count = 0;
  int samples_per_circuit = 1;

  long long total_samples() const {
    return static_cast<long long>(circuit_count) * samples_per_circuit;
  }
  std::size_t string_count() const;
};

/// Greedy commuting partition of an arbitrary observable.
MeasurementPlan make_plan(const PauliSum& obs, int m,
                          CommutationMode mode = CommutationMode::kGeneral);

/**
 * Plan for i[T, V] of an open Hubbard lattice. Strings are split into
 * horizontal weight-2, horizontal weight-4 and vertical categories, each
 * coloured greedily.
 */
MeasurementPlan plan_fh(const HubbardModel& model, int m);

/// Closed-form group count 1 + 4 C(n,2) + 16 C(n,4) for i[H_1, H_2] on n
/// qubits, and the same count from the expanded quartic.
long long molecular_group_count_binomial(int n);
long long molecular_group_count_quartic(int n);

struct MolecularCost {
  long long group_count = 0;
  long long total_samples = 0;
};

/// Throws std::invalid_argument for n < 2 or if the two forms disagree.
MolecularCost plan_molecular(int n, int m);

/// Concrete greedy grouping of a molecular feedback observable.
MeasurementPlan plan_molecular_grouping(const MolecularSystem& sys, int m);

/// Dense eigendecomposition of a Hermitian observable.
struct Eigenbasis {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Largest register for the dense eigenbasis model.
inline constexpr int kMaxEigenbasisQubits = 12;

/// Thread-safe cache of eigendecompositions keyed by observable content.
class EigenbasisCache {
 public:
  std::shared_ptr<const Eigenbasis> get(const PauliSum& obs);
  std::size_t size() const;
  /// Decompositions performed since construction.
  std::size_t computations() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Eigenbasis>> entries_;
  std::size_t computations_ = 0;
};

EigenbasisCache& default_eigenbasis_cache();

/**
 * Mean of noise.m outcomes drawn from the eigenvalue distribution of `obs`
 * in `state`. Returns the exact expectation for the ideal kind.
 */
double estimate_eigenbasis(const StateVector& state, const PauliSum& obs,
                           const NoiseModel& noise, StreamId stream = {});

/**
 * Shot simulation of a commuting-group plan. Each group's joint outcome
 * distribution is obtained from the expectations of the products of its
 * independent generators; the group's estimate is the mean of m outcomes.
 */
class GroupedEstimator {
 public:
  /// Throws std::invalid_argument if a group is not mutually commuting or
  /// needs more than 16 independent generators.
  explicit GroupedEstimator(const MeasurementPlan& plan);

  double estimate(const StateVector& state, const NoiseModel& noise,
                  StreamId stream = {}) const;
  /// Exact expectation summed over groups.
  double exact(const StateVector& state) const;
  /// Standard deviation of the m-shot estimate.
  double analytic_sigma(const StateVector& state, int m) const;

 private:
  struct Group {
    int rank = 0;
    std::vector<PauliString> products;  // unit products over generator subsets
    std::vector<double> outcome;        // observable value per sign pattern
  };

  std::vector<double> distribution(const Group& g,
                                   const StateVector& state) const;

  std::vector<Group> groups_;
};

double estimate_grouped(const StateVector& state, const MeasurementPlan& plan,
                        const NoiseModel& noise, StreamId stream = {});

/// Dispatches A-estimation for one observable according to a noise model.
class FeedbackEstimator {
 public:
  /// `groups` selects the grouped plan; empty means greedy partitioning.
  FeedbackEstimator(const PauliSum& obs, const NoiseModel& noise,
                    const std::vector<PauliSum>& groups = {});

  double estimate(const StateVector& state, StreamId stream) const;
  double exact(const StateVector& state) const;

 private:
  NoiseModel noise_;
  PauliSum obs_;
  CompiledObservable compiled_;
  std::shared_ptr<const Eigenbasis> eigenbasis_;
  std::unique_ptr<GroupedEstimator> grouped_;
};

}  // namespace fqa
