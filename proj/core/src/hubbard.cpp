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

#include "fqa/hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fqa {

void LatticeSpec::validate() const {
  if (n_rows <= 0 || n_cols <= 0) {
    throw std::invalid_argument("LatticeSpec: lattice must be non-empty");
  }
  if (n_qubits() > kMaxQubits) {
    throw std::invalid_argument("LatticeSpec: lattice too large");
  }
  if (n_up < 0 || n_down < 0 || n_up > n_sites() || n_down > n_sites()) {
    throw std::invalid_argument("LatticeSpec: fermion counts " +
                                std::to_string(n_up) + "/" +
                                std::to_string(n_down) + " do not fit " +
                                std::to_string(n_sites()) + " sites");
  }
  if (!(tau > 0.0)) {
    throw std::invalid_argument("LatticeSpec: tau must be positive");
  }
}

HoppingBonds lattice_bonds(const LatticeSpec& spec) {
  HoppingBonds b;
  for (int r = 0; r < spec.n_rows; ++r) {
    for (int c = 0; c + 1 < spec.n_cols; ++c) {
      const Bond bond{r * spec.n_cols + c, r * spec.n_cols + c + 1, false};
      (c % 2 == 0 ? b.h1 : b.h2).push_back(bond);
    }
  }
  for (int r = 0; r + 1 < spec.n_rows; ++r) {
    for (int c = 0; c < spec.n_cols; ++c) {
      const Bond bond{r * spec.n_cols + c, (r + 1) * spec.n_cols + c, true};
      (r % 2 == 0 ? b.v1 : b.v2).push_back(bond);
    }
  }
  return b;
}

FermionSum hubbard_kinetic_fermions(const LatticeSpec& spec,
                                    const std::vector<Bond>& bonds) {
  FermionSum t;
  for (const Bond& bond : bonds) {
    for (Spin s : {Spin::kUp, Spin::kDown}) {
      const int i = 2 * bond.first_site + static_cast<int>(s);
      const int j = 2 * bond.second_site + static_cast<int>(s);
      t += hopping(i, j) * Complex(-spec.tau);
    }
  }
  return t;
}

FermionSum hubbard_kinetic_fermions(const LatticeSpec& spec) {
  const HoppingBonds b = lattice_bonds(spec);
  FermionSum t;
  for (const auto* group : {&b.h1, &b.v1, &b.h2, &b.v2}) {
    t += hubbard_kinetic_fermions(spec, *group);
  }
  return t;
}

FermionSum hubbard_potential_fermions(const LatticeSpec& spec) {
  FermionSum v;
  for (int site = 0; site < spec.n_sites(); ++site) {
    const int up = 2 * site;
    const int down = up + 1;
    v.add(spec.u, {create(up), annihilate(up), create(down),
                   annihilate(down)});
  }
  return v;
}

PauliSum hubbard_feedback_closed_form(const LatticeSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits();
  const HoppingBonds b = lattice_bonds(spec);
  const double scale = spec.tau * spec.u / 4.0;
  PauliSum out(n);
  for (const auto* group : {&b.h1, &b.v1, &b.h2, &b.v2}) {
    for (const Bond& bond : *group) {
      for (Spin s : {Spin::kUp, Spin::kDown}) {
        const int i = 2 * bond.first_site + static_cast<int>(s);
        const int j = 2 * bond.second_site + static_cast<int>(s);
        const int a = 2 * bond.first_site + static_cast<int>(opposite(s));
        const int bq = 2 * bond.second_site + static_cast<int>(opposite(s));
        std::vector<Letter> chain;
        for (int q = i + 1; q < j; ++q) chain.push_back({q, Pauli::kZ});
        const PauliString parity(n, chain);
        const PauliString xy(n, {{i, Pauli::kX}, {j, Pauli::kY}});
        const PauliString yx(n, {{i, Pauli::kY}, {j, Pauli::kX}});
        const PauliString za(n, {{a, Pauli::kZ}});
        const PauliString zb(n, {{bq, Pauli::kZ}});
        out.add((xy * za * parity).with_coefficient(scale));
        out.add((yx * za * parity).with_coefficient(-scale));
        out.add((xy * zb * parity).with_coefficient(-scale));
        out.add((yx * zb * parity).with_coefficient(scale));
      }
    }
  }
  return simplify(out);
}

HubbardModel build_hubbard(const LatticeSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits();
  const HoppingBonds b = lattice_bonds(spec);

  auto encode = [&](const std::vector<Bond>& bonds) {
    return jordan_wigner(hubbard_kinetic_fermions(spec, bonds), n);
  };
  PauliSum h1 = encode(b.h1);
  PauliSum h2 = encode(b.h2);
  PauliSum v1 = encode(b.v1);
  PauliSum v2 = encode(b.v2);
  PauliSum t = simplify(h1 + v1 + h2 + v2);
  PauliSum v = jordan_wigner(hubbard_potential_fermions(spec), n);
  PauliSum full = simplify(t + v);
  PauliSum feedback = simplify(commutator(t, v) * Complex(0.0, 1.0));

  const PauliSum closed = hubbard_feedback_closed_form(spec);
  const double tol = 1e-12 * std::max(1.0, spec.tau * std::abs(spec.u));
  if (!approx_equal(feedback, closed, tol)) {
    throw std::logic_error(
        "build_hubbard: generic i[T,V] disagrees with the closed form");
  }

  return HubbardModel{spec,
                      std::move(t),
                      std::move(v),
                      std::move(h1),
                      std::move(h2),
                      std::move(v1),
                      std::move(v2),
                      std::move(full),
                      std::move(feedback)};
}

}  // namespace fqa
