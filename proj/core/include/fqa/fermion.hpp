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

#include <vector>

#include "fqa/pauli.hpp"

namespace fqa {

enum class Ladder : std::uint8_t { kCreate, kAnnihilate };

struct LadderOp {
  int mode;
  Ladder kind;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp create(int mode) { return {mode, Ladder::kCreate}; }
inline LadderOp annihilate(int mode) { return {mode, Ladder::kAnnihilate}; }

/// coefficient * ladder[0] ladder[1] ... (operator order, left to right).
struct FermionTerm {
  Complex coefficient = 1.0;
  std::vector<LadderOp> ladder;
};

class FermionSum {
 public:
  FermionSum() = default;
  explicit FermionSum(std::vector<FermionTerm> terms)
      : terms_(std::move(terms)) {}

  std::span<const FermionTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(Complex coefficient, std::vector<LadderOp> ladder);
  void add(FermionTerm term) { terms_.push_back(std::move(term)); }

  FermionSum& operator+=(const FermionSum& other);
  FermionSum& operator-=(const FermionSum& other);
  FermionSum& operator*=(Complex scale);

  /// Hermitian conjugate: reverses each ladder and swaps create/annihilate.
  FermionSum adjoint() const;

  /// Largest mode index referenced, or -1 when empty.
  int max_mode() const;

 private:
  std::vector<FermionTerm> terms_;
};

FermionSum operator+(FermionSum a, const FermionSum& b);
FermionSum operator-(FermionSum a, const FermionSum& b);
FermionSum operator*(FermionSum a, Complex scale);
FermionSum operator*(Complex scale, FermionSum a);
/// Ladder concatenation, no reordering.
FermionSum operator*(const FermionSum& a, const FermionSum& b);

/// a b - b a, unsimplified.
FermionSum commutator(const FermionSum& a, const FermionSum& b);
/// a b + b a, unsimplified.
FermionSum anticommutator(const FermionSum& a, const FermionSum& b);

/// a_mode^dagger a_mode.
FermionSum number_operator(int mode, int n_modes);

/// a_i^dagger a_j + a_j^dagger a_i.
FermionSum hopping(int i, int j);

/**
 * Jordan-Wigner image of `f` on `n_modes` qubits:
 *
 *   a_p         -> (X_p + i Y_p)/2 Z_0 ... Z_{p-1}
 *   a_p^dagger  -> (X_p - i Y_p)/2 Z_0 ... Z_{p-1}
 *
 * Products are expanded at the Pauli level and simplified.
 */
PauliSum jordan_wigner(const FermionSum& f, int n_modes);

}  // namespace fqa
