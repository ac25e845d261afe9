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

#include <array>
#include <vector>

#include "fqa/fermion.hpp"
#include "fqa/pauli.hpp"

namespace fqa {

enum class Spin : std::uint8_t { kUp = 0, kDown = 1 };

inline Spin opposite(Spin s) {
  return s == Spin::kUp ? Spin::kDown : Spin::kUp;
}

/// Open-boundary rectangular Fermi-Hubbard lattice with uniform hopping.
struct LatticeSpec {
  int n_rows = 1;
  int n_cols = 2;
  double tau = 1.0;  // tunnelling amplitude
  double u = 0.0;    // on-site interaction
  int n_up = 0;
  int n_down = 0;

  /// Throws std::invalid_argument on empty lattices or overfilled spins.
  void validate() const;

  int n_sites() const { return n_rows * n_cols; }
  int n_qubits() const { return 2 * n_sites(); }

  /// Interleaved row-major ordering: 2 (r n_c + c) + [spin == down].
  int qubit(int row, int col, Spin spin) const {
    return 2 * (row * n_cols + col) + static_cast<int>(spin);
  }
};

/// One nearest-neighbour bond; `first` precedes `second` in qubit order.
struct Bond {
  int first_site;
  int second_site;
  bool vertical;
};

/// Bonds of the open lattice split into the four hopping groups.
struct HoppingBonds {
  std::vector<Bond> h1;  // horizontal, even left column
  std::vector<Bond> h2;  // horizontal, odd left column
  std::vector<Bond> v1;  // vertical, even upper row
  std::vector<Bond> v2;  // vertical, odd upper row
};

HoppingBonds lattice_bonds(const LatticeSpec& spec);

struct HubbardModel {
  LatticeSpec spec;
  PauliSum t_sum;  // kinetic term T
  PauliSum v_sum;  // on-site term V
  PauliSum h_h1;
  PauliSum h_h2;
  PauliSum h_v1;
  PauliSum h_v2;
  PauliSum full;          // T + V
  PauliSum feedback_obs;  // i[T, V]

  /// Hopping groups in circuit order: h1, v1, h2, v2.
  std::array<const PauliSum*, 4> hopping_groups() const {
    return {&h_h1, &h_v1, &h_h2, &h_v2};
  }
};

/**
 * Builds the Jordan-Wigner encoded Hubbard model. The feedback observable is
 * computed as i[T, V] through the generic Pauli commutator and checked
 * against the directly constructed closed form; a mismatch throws
 * std::logic_error.
 */
HubbardModel build_hubbard(const LatticeSpec& spec);

/// Fermionic kinetic term restricted to a set of bonds (both spins).
FermionSum hubbard_kinetic_fermions(const LatticeSpec& spec,
                                    const std::vector<Bond>& bonds);
/// Full fermionic kinetic term T.
FermionSum hubbard_kinetic_fermions(const LatticeSpec& spec);
/// Fermionic on-site term V.
FermionSum hubbard_potential_fermions(const LatticeSpec& spec);

/**
 * i[T, V] written out term by term:
 *
 *   (tau U / 4) sum_{<i,j>} (X_i Y_j Z_a - X_j Y_i Z_a - X_i Y_j Z_b
 *                            + X_j Y_i Z_b) Z_{i+1} ... Z_{j-1}
 *
 * where a (b) is the opposite-spin orbital on the site of i (j).
 */
PauliSum hubbard_feedback_closed_form(const LatticeSpec& spec);

}  // namespace fqa
