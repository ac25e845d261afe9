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

#include <Eigen/Dense>

#include "fqa/fermion.hpp"
#include "fqa/integrals.hpp"
#include "fqa/pauli.hpp"

namespace fqa {

/**
 * Second-quantized molecular Hamiltonian on spin orbitals. Spin orbital 2p is
 * the alpha copy of spatial orbital p and 2p+1 the beta copy.
 *
 *   H_1 = sum_pq h_pq a_p^+ a_q
 *   H_2 = 1/2 sum_pqrs h_pqrs a_p^+ a_q^+ a_r a_s
 *
 * h_pqrs is stored in the operator order above, so h_pqrs = (ps|qr) for
 * same-spin (p,s) and (q,r). The nuclear repulsion is carried separately and
 * never enters the Pauli sums.
 */
struct MolecularSystem {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  int n_alpha = 0;
  int n_beta = 0;
  Eigen::MatrixXd h_pq;
  Tensor4 h_pqrs;
  double e_nuclear = 0.0;
  PauliSum h1_sum{1};
  PauliSum h2_sum{1};
  PauliSum full{1};          // H_1 + H_2
  PauliSum feedback_obs{1};  // i[H_1, H_2]
};

/// Throws std::invalid_argument when integral symmetry is violated by more
/// than `symmetry_tol`.
MolecularSystem build_molecular(const MolecularIntegrals& ints,
                                double symmetry_tol = 1e-8);

FermionSum one_body_fermions(const Eigen::MatrixXd& h_pq);
FermionSum two_body_fermions(const Tensor4& h_pqrs);

/**
 * [H_1, H_2] expanded with the single-commutator identity
 *
 *   [a_i^+ a_j, a_a^+ a_b^+ a_c a_d] = d_ja a_i^+ a_b^+ a_c a_d
 *       + d_jb a_a^+ a_i^+ a_c a_d - d_ic a_a^+ a_b^+ a_j a_d
 *       - d_id a_a^+ a_b^+ a_c a_j
 *
 * used to cross-check the Pauli-level commutator on small registers.
 */
FermionSum one_two_body_commutator_fermions(const Eigen::MatrixXd& h_pq,
                                            const Tensor4& h_pqrs);

}  // namespace fqa
