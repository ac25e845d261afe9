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

#include "fqa/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fqa/eigensolver.hpp"

namespace fqa {
namespace {

double pauli_expectation(const StateVector& state, const PauliString& p) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto amps = state.amplitudes();
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  Complex acc = 0.0;
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const Complex t = std::conj(amps[b ^ x]) * amps[b];
    acc += (std::popcount(b & z) & 1) ? -t : t;
  }
  return (acc * p.coefficient() * kIPow[p.y_count() & 3]).real();
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_shots(int m) {
  if (m < 1) throw std::invalid_argument("measurement: m must be >= 1");
}

std::vector<double> cumulative(std::vector<double> p) {
  double acc = 0.0;
  for (double& v : p) {
    acc += std::max(v, 0.0);
    v = acc;
  }
  return p;
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kIdeal:
      return "ideal";
    case NoiseKind::kEigenMultinomial:
      return "eigen_multinomial";
    case NoiseKind::kGroupedPauli:
      return "grouped_pauli";
  }
  return "ideal";
}

NoiseKind parse_noise_kind(std::string_view name) {
  if (name == "ideal") return NoiseKind::kIdeal;
  if (name == "eigen_multinomial") return NoiseKind::kEigenMultinomial;
  if (name == "grouped_pauli") return NoiseKind::kGroupedPauli;
  throw std::invalid_argument("unknown noise kind '" + std::string(name) +
                              "'");
}

void NoiseModel::validate() const {
  if (kind != NoiseKind::kIdeal) require_shots(m);
}

std::size_t MeasurementPlan::string_count() const {
  std::size_t n = 0;
  for (const PauliSum& g : groups) n += g.size();
  return n;
}

MeasurementPlan make_plan(const PauliSum& obs, int m, CommutationMode mode) {
  require_shots(m);
  MeasurementPlan plan;
  plan.groups = partition_commuting(simplify(obs), mode);
  plan.circuit_count = static_cast<int>(plan.groups.size());
  plan.samples_per_circuit = m;
  return plan;
}

MeasurementPlan plan_fh(const HubbardModel& model, int m) {
  require_shots(m);
  const int n = model.spec.n_qubits();
  PauliSum horizontal_2(n), horizontal_4(n), vertical(n);
  const PauliSum obs = simplify(model.feedback_obs);
  for (const PauliString& t : obs.terms()) {
    const std::uint64_t flips = t.x_mask();
    if (std::popcount(flips) != 2) {
      throw std::logic_error("plan_fh: unexpected string " + t.label());
    }
    const int lo = std::countr_zero(flips);
    const int hi = 63 - std::countl_zero(flips);
    const bool horizontal = model.spec.n_cols >= 2 && hi - lo == 2;
    if (!horizontal) {
      vertical.add(t);
    } else if (t.weight() == 2) {
      horizontal_2.add(t);
    } else {
      horizontal_4.add(t);
    }
  }
  MeasurementPlan plan;
  plan.samples_per_circuit = m;
  for (const PauliSum* part : {&horizontal_2, &horizontal_4, &vertical}) {
    for (PauliSum& g : partition_commuting(*part)) {
      plan.groups.push_back(std::move(g));
    }
  }
  plan.circuit_count = static_cast<int>(plan.groups.size());
  return plan;
}

long long molecular_group_count_binomial(int n) {
  return 1 + 4 * binomial(n, 2) + 16 * binomial(n, 4);
}

long long molecular_group_count_quartic(int n) {
  const long long v = n;
  const long long num = 2 * v * v * v * v - 12 * v * v * v + 28 * v * v -
                        18 * v + 3;
  if (num % 3 != 0) {
    throw std::logic_error("molecular_group_count_quartic: not integral");
  }
  return num / 3;
}

MolecularCost plan_molecular(int n, int m) {
  if (n < 2) throw std::invalid_argument("plan_molecular: n must be >= 2");
  require_shots(m);
  const long long binom = molecular_group_count_binomial(n);
  if (binom != molecular_group_count_quartic(n)) {
    throw std::logic_error("plan_molecular: closed forms disagree");
  }
  return {binom, binom * m};
}

MeasurementPlan plan_molecular_grouping(const MolecularSystem& sys, int m) {
  return make_plan(sys.feedback_obs, m);
}

std::shared_ptr<const Eigenbasis> EigenbasisCache::get(const PauliSum& obs) {
  if (obs.n_qubits() > kMaxEigenbasisQubits) {
    throw std::invalid_argument(
        "eigenbasis noise model supports at most 12 qubits; use "
        "grouped_pauli for wider registers");
  }
  const PauliSum s = simplify(obs);
  std::string key = std::to_string(s.n_qubits()) + "\n" + s.to_text();
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  if (!s.is_hermitian()) {
    throw std::invalid_argument("eigenbasis: observable is not Hermitian");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(s));
  auto basis = std::make_shared<Eigenbasis>();
  basis->values = es.eigenvalues();
  basis->vectors = es.eigenvectors();
  ++computations_;
  entries_.emplace(std::move(key), basis);
  return basis;
}

std::size_t EigenbasisCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::size_t EigenbasisCache::computations() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return computations_;
}

EigenbasisCache& default_eigenbasis_cache() {
  static EigenbasisCache cache;
  return cache;
}

namespace {

double sample_eigenbasis(const Eigenbasis& basis, const StateVector& state,
                         const NoiseModel& noise, StreamId stream) {
  const auto amps = state.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> psi(
      amps.data(), static_cast<Eigen::Index>(amps.size()));
  const Eigen::VectorXcd c = basis.vectors.adjoint() * psi;
  std::vector<double> p(static_cast<std::size_t>(c.size()));
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    p[static_cast<std::size_t>(i)] = std::norm(c(i));
  }
  const std::vector<double> cdf = cumulative(std::move(p));
  RngStream rng(noise.seed, stream);
  double sum = 0.0;
  for (int shot = 0; shot < noise.m; ++shot) {
    sum += basis.values(static_cast<Eigen::Index>(sample_cdf(cdf, rng)));
  }
  return sum / noise.m;
}

}  // namespace

double estimate_eigenbasis(const StateVector& state, const PauliSum& obs,
                           const NoiseModel& noise, StreamId stream) {
  noise.validate();
  if (noise.kind == NoiseKind::kIdeal) return expectation(state, obs);
  return sample_eigenbasis(*default_eigenbasis_cache().get(obs), state, noise,
                           stream);
}

GroupedEstimator::GroupedEstimator(const MeasurementPlan& plan) {
  for (const PauliSum& raw : plan.groups) {
    if (raw.empty()) continue;
    const int n = raw.n_qubits();
    if (!mutually_commuting(raw)) {
      throw std::invalid_argument("GroupedEstimator: group does not commute");
    }
    // Row-reduce the (x, z) vectors; `combo` records which generators each
    // reduced row is built from.
    struct Row {
      std::uint64_t x, z, combo;
    };
    std::vector<Row> rows;
    std::vector<PauliString> generators;
    std::vector<std::uint64_t> term_combo;
    for (const PauliString& t : raw.terms()) {
      Row v{t.x_mask(), t.z_mask(), 0};
      for (const Row& r : rows) {
        // Pivot: lowest x bit, or lowest z bit for diagonal rows.
        const bool hit = r.x ? (v.x & (r.x & -r.x)) != 0
                             : (v.z & (r.z & -r.z)) != 0;
        if (hit) {
          v.x ^= r.x;
          v.z ^= r.z;
          v.combo ^= r.combo;
        }
      }
      if (v.x != 0 || v.z != 0) {
        const std::uint64_t bit = std::uint64_t{1} << generators.size();
        generators.push_back(
            PauliString::from_masks(n, t.x_mask(), t.z_mask(), 1.0));
        v.combo ^= bit;
        rows.push_back(v);
        if (generators.size() > 16) {
          throw std::invalid_argument(
              "GroupedEstimator: group has more than 16 generators");
        }
        // The term is itself a generator; its reduced row is not.
        term_combo.push_back(bit);
      } else {
        term_combo.push_back(v.combo);
      }
    }

    Group g;
    g.rank = static_cast<int>(generators.size());
    const std::size_t patterns = std::size_t{1} << g.rank;
    g.products.assign(patterns, PauliString(n));
    for (std::size_t s = 1; s < patterns; ++s) {
      const int low = std::countr_zero(s);
      g.products[s] = g.products[s & (s - 1)] * generators[low];
    }
    g.outcome.assign(patterns, 0.0);
    for (std::size_t t = 0; t < raw.size(); ++t) {
      const PauliString& term = raw.terms()[t];
      const Complex c = term.coefficient();
      if (std::abs(c.imag()) > 1e-10 * std::max(1.0, std::abs(c))) {
        throw std::invalid_argument("GroupedEstimator: non-real coefficient");
      }
      // Unit string = phase * product of generators, phase in {+1, -1}.
      const PauliString& prod = g.products[term_combo[t]];
      const PauliString unit =
          PauliString::from_masks(n, term.x_mask(), term.z_mask(), 1.0);
      if (!prod.same_letters(unit)) {
        throw std::logic_error("GroupedEstimator: elimination mismatch");
      }
      const double phase = prod.coefficient().real();
      for (std::size_t u = 0; u < patterns; ++u) {
        const double sign =
            (std::popcount(u & term_combo[t]) & 1) ? -1.0 : 1.0;
        g.outcome[u] += c.real() * phase * sign;
      }
    }
    groups_.push_back(std::move(g));
  }
}

std::vector<double> GroupedEstimator::distribution(
    const Group& g, const StateVector& state) const {
  std::vector<double> p(g.products.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    p[s] = s == 0 ? 1.0 : pauli_expectation(state, g.products[s]);
  }
  // Walsh-Hadamard transform: p(u) = 2^-r sum_S (-1)^{|S & u|} <g_S>.
  for (std::size_t h = 1; h < p.size(); h <<= 1) {
    for (std::size_t i = 0; i < p.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = p[j];
        const double b = p[j + h];
        p[j] = a + b;
        p[j + h] = a - b;
      }
    }
  }
  const double scale = 1.0 / static_cast<double>(p.size());
  for (double& v : p) v = std::max(0.0, v * scale);
  return p;
}

double GroupedEstimator::estimate(const StateVector& state,
                                  const NoiseModel& noise,
                                  StreamId stream) const {
  noise.validate();
  if (noise.kind == NoiseKind::kIdeal) return exact(state);
  RngStream rng(noise.seed, stream);
  double total = 0.0;
  for (const Group& g : groups_) {
    const std::vector<double> cdf = cumulative(distribution(g, state));
    double sum = 0.0;
    for (int shot = 0; shot < noise.m; ++shot) {
      sum += g.outcome[sample_cdf(cdf, rng)];
    }
    total += sum / noise.m;
  }
  return total;
}

double GroupedEstimator::exact(const StateVector& state) const {
  double total = 0.0;
  for (const Group& g : groups_) {
    const std::vector<double> p = distribution(g, state);
    for (std::size_t u = 0; u < p.size(); ++u) total += p[u] * g.outcome[u];
  }
  return total;
}

double GroupedEstimator::analytic_sigma(const StateVector& state,
                                        int m) const {
  require_shots(m);
  double var = 0.0;
  for (const Group& g : groups_) {
    const std::vector<double> p = distribution(g, state);
    double mean = 0.0, second = 0.0;
    for (std::size_t u = 0; u < p.size(); ++u) {
      mean += p[u] * g.outcome[u];
      second += p[u] * g.outcome[u] * g.outcome[u];
    }
    var += std::max(0.0, second - mean * mean);
  }
  return std::sqrt(var / m);
}

double estimate_grouped(const StateVector& state, const MeasurementPlan& plan,
                        const NoiseModel& noise, StreamId stream) {
  return GroupedEstimator(plan).estimate(state, noise, stream);
}

FeedbackEstimator::FeedbackEstimator(const PauliSum& obs,
                                     const NoiseModel& noise,
                                     const std::vector<PauliSum>& groups)
    : noise_(noise), obs_(simplify(obs)), compiled_(obs_) {
  noise_.validate();
  switch (noise_.kind) {
    case NoiseKind::kIdeal:
      break;
    case NoiseKind::kEigenMultinomial:
      eigenbasis_ = default_eigenbasis_cache().get(obs_);
      break;
    case NoiseKind::kGroupedPauli: {
      MeasurementPlan plan;
      if (groups.empty()) {
        plan = make_plan(obs_, noise_.m);
      } else {
        plan.groups = groups;
        plan.circuit_count = static_cast<int>(groups.size());
        plan.samples_per_circuit = noise_.m;
      }
      grouped_ = std::make_unique<GroupedEstimator>(plan);
      break;
    }
  }
}

double FeedbackEstimator::estimate(const StateVector& state,
                                   StreamId stream) const {
  switch (noise_.kind) {
    case NoiseKind::kIdeal:
      return compiled_.expectation(state);
    case NoiseKind::kEigenMultinomial:
      return sample_eigenbasis(*eigenbasis_, state, noise_, stream);
    case NoiseKind::kGroupedPauli:
      return grouped_->estimate(state, noise_, stream);
  }
  return compiled_.expectation(state);
}

double FeedbackEstimator::exact(const StateVector& state) const {
  return compiled_.expectation(state);
}

}  // namespace fqa
