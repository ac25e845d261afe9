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
#include <span>
#include <vector>

#include "fqa/pauli.hpp"

namespace fqa {

/// Widest register the dense simulator accepts.
inline constexpr int kMaxStateQubits = 26;

#ifdef NDEBUG
inline constexpr bool kDebugChecks = false;
#else
inline constexpr bool kDebugChecks = true;
#endif

/**
 * Dense 2^n amplitude vector. Basis index bit q is the occupation of qubit q
 * (qubit 0 least significant).
 */
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Normalizes `amplitudes`; throws if the vector is zero or mis-sized.
  static StateVector from_amplitudes(int n_qubits,
                                     std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  void normalize();

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double overlap_squared(const StateVector& a, const StateVector& b);

/**
 * exp(-i angle c P) |psi> for the unit-letter string P with real coefficient
 * c, applied in place as cos(theta)|psi> - i sin(theta) P|psi>.
 */
void apply_pauli_exponential(StateVector& state, const PauliString& p,
                             double angle);

/**
 * Product of exp(-i scale c_t P_t) over the terms of a commuting group, in
 * the group's stored order. Exact because the terms commute; with
 * `verify_commuting` a non-commuting group throws std::invalid_argument.
 */
void apply_group_exponential(StateVector& state, const PauliSum& group,
                             double scale,
                             bool verify_commuting = kDebugChecks);

/// A Hermitian Pauli sum laid out for repeated expectation values.
class CompiledObservable {
 public:
  /// Throws std::invalid_argument if `obs` is not Hermitian.
  explicit CompiledObservable(const PauliSum& obs);

  int n_qubits() const { return n_qubits_; }
  std::size_t term_count() const { return term_count_; }
  bool empty() const { return term_count_ == 0; }

  /// <psi|O|psi>; throws std::runtime_error on an imaginary residue.
  double expectation(const StateVector& state) const;

  /// out = O in.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;

  /// Sum of |c_i|, an upper bound on the spectral norm.
  double weight_norm() const { return weight_norm_; }

 private:
  struct Block {
    std::uint64_t x_mask;
    std::vector<std::uint64_t> z_masks;
    std::vector<Complex> weights;  // c * i^{#Y}
  };

  int n_qubits_;
  std::size_t term_count_ = 0;
  double weight_norm_ = 0.0;
  std::vector<Block> blocks_;
  mutable std::vector<Complex> scratch_;
};

/**
 * exp(-i t H)|psi> for Hermitian H by a scaled Taylor series, accurate to
 * roughly machine precision. Cost grows with t * sum_i |c_i|.
 */
void apply_evolution(StateVector& state, const CompiledObservable& h,
                     double t);

/// <psi|obs|psi> for Hermitian `obs`.
double expectation(const StateVector& state, const PauliSum& obs);

}  // namespace fqa
