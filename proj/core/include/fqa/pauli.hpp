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

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqa {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped by simplification.
inline constexpr double kDedupTolerance = 1e-12;

/// Widest register a PauliString can address.
inline constexpr int kMaxQubits = 64;

enum class Pauli : std::uint8_t { kX = 1, kY = 2, kZ = 3 };

char pauli_char(Pauli p);

struct Letter {
  int qubit;
  Pauli op;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/**
 * A weighted tensor product of single-qubit Pauli operators.
 *
 * Only non-identity sites are stored, sorted by qubit index. The x/z bit
 * masks are cached alongside the letters so that commutation checks and
 * statevector kernels never have to walk the letter list:
 *
 *   P = coefficient * i^{|x & z|} * X^x Z^z
 *
 * with X^x Z^z acting qubit-wise (X on x-bits, then Z on z-bits).
 */
class PauliString {
 public:
  /// The identity on `n_qubits` qubits scaled by `coefficient`.
  explicit PauliString(int n_qubits, Complex coefficient = 1.0);

  /// Letters may come in any order; duplicates on a qubit are rejected.
  PauliString(int n_qubits, std::vector<Letter> letters,
              Complex coefficient = 1.0);

  /// Parses labels such as "X0 Z1 Y2". "I" or an empty label is identity.
  static PauliString parse(std::string_view label, int n_qubits,
                           Complex coefficient = 1.0);

  /// Builds a string directly from its x/z masks (Y where both bits are set).
  static PauliString from_masks(int n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask,
                                Complex coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  Complex coefficient() const { return coefficient_; }
  std::span<const Letter> letters() const { return letters_; }
  int weight() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  /// Number of Y letters; P = c * i^{y_count} X^x Z^z.
  int y_count() const;

  PauliString with_coefficient(Complex c) const;

  /// "X0 Z1 Y2", or "I" for the identity.
  std::string label() const;

  bool commutes_with(const PauliString& other) const;
  bool qubitwise_commutes_with(const PauliString& other) const;
  bool same_letters(const PauliString& other) const {
    return x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
  }

 private:
  void sync_masks();

  int n_qubits_;
  Complex coefficient_;
  std::vector<Letter> letters_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

/// Lexicographic order on letter maps; coefficients are ignored.
std::strong_ordering compare_letters(const PauliString& a,
                                     const PauliString& b);

/// Exact product, phase included in the coefficient.
PauliString multiply(const PauliString& a, const PauliString& b);

inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

/// A linear combination of Pauli strings on a fixed register.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliString> terms);

  static PauliSum identity(int n_qubits, Complex coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::span<const PauliString> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(PauliString term);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  /// Coefficient of the identity string after merging, 0 if absent.
  Complex identity_coefficient() const;
  /// Copy with every identity term removed.
  PauliSum without_identity() const;

  /// True when the simplified sum has only real coefficients (within tol).
  bool is_hermitian(double tol = 1e-10) const;

  /// One line per term: "coeff_re coeff_im LABEL".
  std::string to_text() const;
  static PauliSum parse_text(std::string_view text, int n_qubits);

 private:
  int n_qubits_;
  std::vector<PauliString> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(PauliSum a, Complex scale);
PauliSum operator*(Complex scale, PauliSum a);
/// Distributive product, simplified.
PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Merges like terms, drops |c| < tol and sorts by letter map.
PauliSum simplify(const PauliSum& s, double tol = kDedupTolerance);

/// [a, b] = ab - ba, simplified.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// True when the two sums are term-for-term equal after simplification.
bool approx_equal(const PauliSum& a, const PauliSum& b, double tol = 1e-12);

enum class CommutationMode { kQubitwise, kGeneral };

bool commute(const PauliString& a, const PauliString& b, CommutationMode mode);

/// True when every pair of terms commutes under `mode`.
bool mutually_commuting(const PauliSum& s,
                        CommutationMode mode = CommutationMode::kGeneral);

/// Greedy first-fit colouring over the letter-sorted terms of `s`.
std::vector<PauliSum> partition_commuting(
    const PauliSum& s, CommutationMode mode = CommutationMode::kGeneral);

}  // namespace fqa
