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
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fqa/pauli.hpp"
#include "fqa/statevector.hpp"

namespace fqa {

/// Largest sector handled by dense diagonalization.
inline constexpr std::size_t kMaxDenseSector = 20000;

/**
 * Fixed-occupation subspace. Either (n_up, n_down) counted on even/odd
 * qubits, or n_total counted on all qubits. Exactly one convention is set.
 */
struct SectorSpec {
  std::optional<int> n_up;
  std::optional<int> n_down;
  std::optional<int> n_total;

  static SectorSpec spins(int up, int down) { return {up, down, {}}; }
  static SectorSpec total(int n) { return {{}, {}, n}; }

  void validate(int n_qubits) const;
  bool contains(std::uint64_t basis_index) const;
};

/// Basis indices of the sector, ascending.
std::vector<std::uint64_t> sector_basis(int n_qubits, const SectorSpec& s);

struct EigenResult {
  double ground_energy = 0.0;
  StateVector ground_state{1};
  /// Distance to the first distinct eigenvalue; infinity for a 1-level sector.
  double gap = 0.0;
  int degeneracy = 1;
  /// Orthonormal basis of the ground space; ground_space[0] == ground_state.
  std::vector<StateVector> ground_space;
  /// All sector eigenvalues, ascending.
  std::vector<double> spectrum;

  /// Squared norm of the projection of `psi` onto the ground space.
  double ground_space_overlap(const StateVector& psi) const;
};

/**
 * Ground state of `h` restricted to `sector`, embedded back into the full
 * register. Throws std::invalid_argument for empty or oversized sectors and
 * when `h` couples the sector to its complement.
 */
EigenResult sector_ground_state(const PauliSum& h, const SectorSpec& sector);

/// Dense 2^n x 2^n matrix; n <= 14.
Eigen::MatrixXcd to_dense(const PauliSum& h);

struct SpectralBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Extremal eigenvalues of a Hermitian sum; dense up to 10 qubits, Lanczos
/// beyond.
SpectralBounds extremal_eigenvalues(const PauliSum& h);

/// max |lambda| of a Hermitian sum.
double spectral_norm(const PauliSum& h);

}  // namespace fqa
