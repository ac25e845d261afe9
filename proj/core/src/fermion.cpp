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

#include "fqa/fermion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fqa {
namespace {

// Image of a single ladder operator as a two-term sum. The second string
// has both bits set on the ladder qubit, i.e. Y_p with the parity string.
PauliSum ladder_image(LadderOp op, int n_modes) {
  const std::uint64_t parity =
      op.mode == 0 ? 0 : (std::uint64_t{1} << op.mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const double y_sign = op.kind == Ladder::kAnnihilate ? 1.0 : -1.0;
  PauliSum s(n_modes);
  s.add(PauliString::from_masks(n_modes, bit, parity, 0.5));
  s.add(PauliString::from_masks(n_modes, bit, parity | bit,
                                Complex(0.0, 0.5 * y_sign)));
  return s;
}

}  // namespace

void FermionSum::add(Complex coefficient, std::vector<LadderOp> ladder) {
  terms_.push_back({coefficient, std::move(ladder)});
}

FermionSum& FermionSum::operator+=(const FermionSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionSum& FermionSum::operator-=(const FermionSum& other) {
  for (const FermionTerm& t : other.terms_) {
    terms_.push_back({-t.coefficient, t.ladder});
  }
  return *this;
}

FermionSum& FermionSum::operator*=(Complex scale) {
  for (FermionTerm& t : terms_) t.coefficient *= scale;
  return *this;
}

FermionSum FermionSum::adjoint() const {
  FermionSum out;
  for (const FermionTerm& t : terms_) {
    FermionTerm a{std::conj(t.coefficient), {}};
    a.ladder.reserve(t.ladder.size());
    for (auto it = t.ladder.rbegin(); it != t.ladder.rend(); ++it) {
      a.ladder.push_back({it->mode, it->kind == Ladder::kCreate
                                        ? Ladder::kAnnihilate
                                        : Ladder::kCreate});
    }
    out.terms_.push_back(std::move(a));
  }
  return out;
}

int FermionSum::max_mode() const {
  int m = -1;
  for (const FermionTerm& t : terms_) {
    for (const LadderOp& op : t.ladder) m = std::max(m, op.mode);
  }
  return m;
}

FermionSum operator+(FermionSum a, const FermionSum& b) {
  a += b;
  return a;
}

FermionSum operator-(FermionSum a, const FermionSum& b) {
  a -= b;
  return a;
}

FermionSum operator*(FermionSum a, Complex scale) {
  a *= scale;
  return a;
}

FermionSum operator*(Complex scale, FermionSum a) {
  a *= scale;
  return a;
}

FermionSum operator*(const FermionSum& a, const FermionSum& b) {
  FermionSum out;
  for (const FermionTerm& ta : a.terms()) {
    for (const FermionTerm& tb : b.terms()) {
      FermionTerm t{ta.coefficient * tb.coefficient, ta.ladder};
      t.ladder.insert(t.ladder.end(), tb.ladder.begin(), tb.ladder.end());
      out.add(std::move(t));
    }
  }
  return out;
}

FermionSum commutator(const FermionSum& a, const FermionSum& b) {
  return a * b - b * a;
}

FermionSum anticommutator(const FermionSum& a, const FermionSum& b) {
  return a * b + b * a;
}

FermionSum number_operator(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("number_operator: mode " +
                                std::to_string(mode) + " out of range");
  }
  FermionSum f;
  f.add(1.0, {create(mode), annihilate(mode)});
  return f;
}

FermionSum hopping(int i, int j) {
  FermionSum f;
  f.add(1.0, {create(i), annihilate(j)});
  f.add(1.0, {create(j), annihilate(i)});
  return f;
}

PauliSum jordan_wigner(const FermionSum& f, int n_modes) {
  if (n_modes <= 0 || n_modes > kMaxQubits) {
    throw std::invalid_argument("jordan_wigner: bad register width");
  }
  std::vector<PauliSum> create_images;
  std::vector<PauliSum> annihilate_images;
  create_images.reserve(static_cast<std::size_t>(n_modes));
  annihilate_images.reserve(static_cast<std::size_t>(n_modes));
  for (int p = 0; p < n_modes; ++p) {
    create_images.push_back(ladder_image(create(p), n_modes));
    annihilate_images.push_back(ladder_image(annihilate(p), n_modes));
  }

  PauliSum total(n_modes);
  for (const FermionTerm& t : f.terms()) {
    if (t.coefficient == Complex(0.0)) continue;
    PauliSum product = PauliSum::identity(n_modes, t.coefficient);
    for (const LadderOp& op : t.ladder) {
      if (op.mode < 0 || op.mode >= n_modes) {
        throw std::invalid_argument("jordan_wigner: mode " +
                                    std::to_string(op.mode) +
                                    " out of range for " +
                                    std::to_string(n_modes) + " modes");
      }
      const auto& image = op.kind == Ladder::kCreate
                              ? create_images[static_cast<std::size_t>(op.mode)]
                              : annihilate_images[static_cast<std::size_t>(
                                    op.mode)];
      product = product * image;
      if (product.empty()) break;
    }
    total += product;
  }
  return simplify(total);
}

}  // namespace fqa
