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

#include "fqa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace fqa {
namespace {

Complex i_power(int k) {
  switch (k & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t v) {
  return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

void check_state_width(int n_qubits) {
  if (n_qubits <= 0 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("StateVector: width " +
                                std::to_string(n_qubits) +
                                " outside [1, 26]");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_state_width(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex(0.0));
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw std::invalid_argument("StateVector::basis: index out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits,
                                         std::vector<Complex> amplitudes) {
  StateVector s(n_qubits);
  if (amplitudes.size() != s.dimension()) {
    throw std::invalid_argument("StateVector::from_amplitudes: need " +
                                std::to_string(s.dimension()) +
                                " amplitudes");
  }
  s.amplitudes_ = std::move(amplitudes);
  s.normalize();
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::normalize() {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("StateVector: cannot normalize zero vector");
  }
  for (Complex& a : amplitudes_) a /= n;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("inner_product: width mismatch");
  }
  Complex sum = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

double overlap_squared(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

void apply_pauli_exponential(StateVector& state, const PauliString& p,
                             double angle) {
  if (p.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("apply_pauli_exponential: width mismatch");
  }
  const Complex c = p.coefficient();
  if (std::abs(c.imag()) > 1e-12 * std::max(1.0, std::abs(c))) {
    throw std::invalid_argument(
        "apply_pauli_exponential: coefficient of " + p.label() +
        " is not real");
  }
  const double theta = angle * c.real();
  if (theta == 0.0) return;
  auto amps = state.amplitudes();
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();

  if (x == 0) {
    const Complex plus = std::polar(1.0, -theta);
    const Complex minus = std::conj(plus);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      amps[b] *= (std::popcount(b & z) & 1) ? minus : plus;
    }
    return;
  }

  // P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>.
  const double cs = std::cos(theta);
  const Complex mix = Complex(0.0, -std::sin(theta)) * i_power(p.y_count());
  const int pivot = 63 - std::countl_zero(x);
  const std::uint64_t half = std::uint64_t{1} << pivot;
  for (std::uint64_t hi = 0; hi < amps.size(); hi += 2 * half) {
    for (std::uint64_t b = hi; b < hi + half; ++b) {
      const std::uint64_t b2 = b ^ x;
      const Complex a0 = amps[b];
      const Complex a1 = amps[b2];
      amps[b] = cs * a0 + mix * parity_sign(b2 & z) * a1;
      amps[b2] = cs * a1 + mix * parity_sign(b & z) * a0;
    }
  }
}

void apply_group_exponential(StateVector& state, const PauliSum& group,
                             double scale, bool verify_commuting) {
  if (group.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("apply_group_exponential: width mismatch");
  }
  if (verify_commuting && !mutually_commuting(group)) {
    throw std::invalid_argument(
        "apply_group_exponential: group terms do not commute");
  }
  if (scale == 0.0) return;
  for (const PauliString& t : group.terms()) {
    apply_pauli_exponential(state, t, scale);
  }
}

CompiledObservable::CompiledObservable(const PauliSum& obs)
    : n_qubits_(obs.n_qubits()) {
  const PauliSum s = simplify(obs);
  std::map<std::uint64_t, std::size_t> by_x;
  for (const PauliString& t : s.terms()) {
    const Complex c = t.coefficient();
    if (std::abs(c.imag()) > 1e-10 * std::max(1.0, std::abs(c))) {
      throw std::invalid_argument("CompiledObservable: term " + t.label() +
                                  " has a non-real coefficient");
    }
    auto [it, inserted] = by_x.try_emplace(t.x_mask(), blocks_.size());
    if (inserted) blocks_.push_back(Block{t.x_mask(), {}, {}});
    Block& block = blocks_[it->second];
    block.z_masks.push_back(t.z_mask());
    block.weights.push_back(c.real() * i_power(t.y_count()));
    weight_norm_ += std::abs(c);
    ++term_count_;
  }
}

double CompiledObservable::expectation(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) {
    throw std::invalid_argument("expectation: width mismatch");
  }
  const auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  scratch_.resize(dim);
  Complex total = 0.0;
  for (const Block& block : blocks_) {
    const std::uint64_t x = block.x_mask;
    for (std::uint64_t b = 0; b < dim; ++b) {
      scratch_[b] = std::conj(amps[b ^ x]) * amps[b];
    }
    for (std::size_t t = 0; t < block.z_masks.size(); ++t) {
      const std::uint64_t z = block.z_masks[t];
      Complex acc = 0.0;
      for (std::uint64_t b = 0; b < dim; ++b) {
        acc += parity_sign(b & z) * scratch_[b];
      }
      total += block.weights[t] * acc;
    }
  }
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, weight_norm_)) {
    throw std::runtime_error("expectation: imaginary residue " +
                             std::to_string(total.imag()));
  }
  return total.real();
}

void CompiledObservable::apply(std::span<const Complex> in,
                               std::span<Complex> out) const {
  const std::size_t dim = std::size_t{1} << n_qubits_;
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("CompiledObservable::apply: size mismatch");
  }
  std::fill(out.begin(), out.end(), Complex(0.0));
  for (const Block& block : blocks_) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (in[b] == Complex(0.0)) continue;
      Complex w = 0.0;
      for (std::size_t t = 0; t < block.z_masks.size(); ++t) {
        w += parity_sign(b & block.z_masks[t]) * block.weights[t];
      }
      out[b ^ block.x_mask] += w * in[b];
    }
  }
}

void apply_evolution(StateVector& state, const CompiledObservable& h,
                     double t) {
  if (state.n_qubits() != h.n_qubits()) {
    throw std::invalid_argument("apply_evolution: width mismatch");
  }
  const double reach = std::abs(t) * h.weight_norm();
  if (reach == 0.0) return;
  const int steps = std::max(1, static_cast<int>(std::ceil(reach / 0.5)));
  const Complex factor(0.0, -t / steps);
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  std::vector<Complex> term(dim), next(dim);
  for (int s = 0; s < steps; ++s) {
    std::copy(amps.begin(), amps.end(), term.begin());
    for (int order = 1; order < 60; ++order) {
      h.apply(term, next);
      const Complex scale = factor / static_cast<double>(order);
      double size = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        term[i] = scale * next[i];
        amps[i] += term[i];
        size += std::norm(term[i]);
      }
      if (size < 1e-34) break;
    }
  }
}

double expectation(const StateVector& state, const PauliSum& obs) {
  return CompiledObservable(obs).expectation(state);
}

}  // namespace fqa
