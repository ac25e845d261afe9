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

#include "fqa/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace fqa {
namespace {

void check_width(int n_qubits) {
  if (n_qubits <= 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString: register width " +
                                std::to_string(n_qubits) +
                                " outside [1, 64]");
  }
}

void check_same_width(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": width mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

// i^k for k taken mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
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

struct MaskKey {
  std::uint64_t x;
  std::uint64_t z;
  bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const noexcept {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
    h ^= k.z + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Accumulates terms keyed by letter map; emits a canonical sorted sum.
class TermAccumulator {
 public:
  explicit TermAccumulator(int n_qubits) : n_qubits_(n_qubits) {}

  void add(std::uint64_t x, std::uint64_t z, Complex c) {
    auto [it, inserted] = index_.try_emplace(MaskKey{x, z}, keys_.size());
    if (inserted) {
      keys_.push_back({x, z});
      values_.push_back(c);
    } else {
      values_[it->second] += c;
    }
  }

  void add(const PauliString& p) {
    add(p.x_mask(), p.z_mask(), p.coefficient());
  }

  PauliSum finish(double tol) const {
    std::vector<PauliString> terms;
    terms.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (std::abs(values_[i]) < tol) continue;
      terms.push_back(
          PauliString::from_masks(n_qubits_, keys_[i].x, keys_[i].z,
                                  values_[i]));
    }
    std::sort(terms.begin(), terms.end(),
              [](const PauliString& a, const PauliString& b) {
                return compare_letters(a, b) < 0;
              });
    return PauliSum(n_qubits_, std::move(terms));
  }

 private:
  int n_qubits_;
  std::unordered_map<MaskKey, std::size_t, MaskKeyHash> index_;
  std::vector<MaskKey> keys_;
  std::vector<Complex> values_;
};

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::kX:
      return 'X';
    case Pauli::kY:
      return 'Y';
    case Pauli::kZ:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(int n_qubits, Complex coefficient)
    : n_qubits_(n_qubits), coefficient_(coefficient) {
  check_width(n_qubits);
}

PauliString::PauliString(int n_qubits, std::vector<Letter> letters,
                         Complex coefficient)
    : n_qubits_(n_qubits),
      coefficient_(coefficient),
      letters_(std::move(letters)) {
  check_width(n_qubits);
  std::sort(letters_.begin(), letters_.end());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.qubit < 0 || l.qubit >= n_qubits_) {
      throw std::invalid_argument("PauliString: qubit " +
                                  std::to_string(l.qubit) +
                                  " out of range for width " +
                                  std::to_string(n_qubits_));
    }
    if (i > 0 && letters_[i - 1].qubit == l.qubit) {
      throw std::invalid_argument("PauliString: repeated qubit " +
                                  std::to_string(l.qubit));
    }
  }
  sync_masks();
}

PauliString PauliString::parse(std::string_view label, int n_qubits,
                               Complex coefficient) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(label)};
  std::string token;
  while (in >> token) {
    const char head = token[0];
    if (head == 'I' && token.size() == 1) continue;
    if (token.size() < 2) {
      throw std::invalid_argument("PauliString::parse: bad token '" + token +
                                  "'");
    }
    int qubit = 0;
    try {
      std::size_t used = 0;
      qubit = std::stoi(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("PauliString::parse: bad token '" + token +
                                  "'");
    }
    switch (head) {
      case 'I':
        break;
      case 'X':
        letters.push_back({qubit, Pauli::kX});
        break;
      case 'Y':
        letters.push_back({qubit, Pauli::kY});
        break;
      case 'Z':
        letters.push_back({qubit, Pauli::kZ});
        break;
      default:
        throw std::invalid_argument("PauliString::parse: bad token '" +
                                    token + "'");
    }
  }
  return PauliString(n_qubits, std::move(letters), coefficient);
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x_mask,
                                    std::uint64_t z_mask,
                                    Complex coefficient) {
  check_width(n_qubits);
  const std::uint64_t support = x_mask | z_mask;
  if (n_qubits < 64 && (support >> n_qubits) != 0) {
    throw std::invalid_argument("PauliString::from_masks: mask exceeds width");
  }
  PauliString p(n_qubits, coefficient);
  p.letters_.reserve(static_cast<std::size_t>(std::popcount(support)));
  for (std::uint64_t rest = support; rest != 0; rest &= rest - 1) {
    const int q = std::countr_zero(rest);
    const bool x = (x_mask >> q) & 1u;
    const bool z = (z_mask >> q) & 1u;
    p.letters_.push_back({q, x ? (z ? Pauli::kY : Pauli::kX) : Pauli::kZ});
  }
  p.x_mask_ = x_mask;
  p.z_mask_ = z_mask;
  return p;
}

void PauliString::sync_masks() {
  x_mask_ = 0;
  z_mask_ = 0;
  for (const Letter& l : letters_) {
    const std::uint64_t bit = std::uint64_t{1} << l.qubit;
    if (l.op == Pauli::kX || l.op == Pauli::kY) x_mask_ |= bit;
    if (l.op == Pauli::kZ || l.op == Pauli::kY) z_mask_ |= bit;
  }
}

int PauliString::y_count() const { return std::popcount(x_mask_ & z_mask_); }

PauliString PauliString::with_coefficient(Complex c) const {
  PauliString p = *this;
  p.coefficient_ = c;
  return p;
}

std::string PauliString::label() const {
  if (letters_.empty()) return "I";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += pauli_char(l.op);
    out += std::to_string(l.qubit);
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  const std::uint64_t clash =
      (x_mask_ & other.z_mask_) ^ (z_mask_ & other.x_mask_);
  return (std::popcount(clash) & 1) == 0;
}

bool PauliString::qubitwise_commutes_with(const PauliString& other) const {
  const std::uint64_t common =
      (x_mask_ | z_mask_) & (other.x_mask_ | other.z_mask_);
  return ((x_mask_ ^ other.x_mask_) & common) == 0 &&
         ((z_mask_ ^ other.z_mask_) & common) == 0;
}

std::strong_ordering compare_letters(const PauliString& a,
                                     const PauliString& b) {
  const auto la = a.letters();
  const auto lb = b.letters();
  return std::lexicographical_compare_three_way(la.begin(), la.end(),
                                                lb.begin(), lb.end());
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_width(a.n_qubits(), b.n_qubits(), "multiply");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // Z^{z_a} X^{x_b} = (-1)^{|z_a & x_b|} X^{x_b} Z^{z_a}.
  const int swap_sign = std::popcount(a.z_mask() & b.x_mask());
  const int y_result = std::popcount(x & z);
  const int phase = a.y_count() + b.y_count() - y_result + 2 * swap_sign;
  return PauliString::from_masks(a.n_qubits(), x, z,
                                 a.coefficient() * b.coefficient() *
                                     i_power(phase));
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_width(n_qubits);
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliString> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  check_width(n_qubits);
  for (const PauliString& t : terms_) {
    check_same_width(n_qubits_, t.n_qubits(), "PauliSum");
  }
}

PauliSum PauliSum::identity(int n_qubits, Complex coefficient) {
  PauliSum s(n_qubits);
  s.add(PauliString(n_qubits, coefficient));
  return s;
}

void PauliSum::add(PauliString term) {
  check_same_width(n_qubits_, term.n_qubits(), "PauliSum::add");
  terms_.push_back(std::move(term));
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_width(n_qubits_, other.n_qubits_, "PauliSum::operator+=");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_width(n_qubits_, other.n_qubits_, "PauliSum::operator-=");
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const PauliString& t : other.terms_) {
    terms_.push_back(t.with_coefficient(-t.coefficient()));
  }
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (PauliString& t : terms_) t = t.with_coefficient(t.coefficient() * scale);
  return *this;
}

Complex PauliSum::identity_coefficient() const {
  Complex c = 0.0;
  for (const PauliString& t : terms_) {
    if (t.is_identity()) c += t.coefficient();
  }
  return c;
}

PauliSum PauliSum::without_identity() const {
  PauliSum out(n_qubits_);
  for (const PauliString& t : terms_) {
    if (!t.is_identity()) out.terms_.push_back(t);
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  const PauliSum s = simplify(*this);
  return std::all_of(s.terms_.begin(), s.terms_.end(),
                     [tol](const PauliString& t) {
                       return std::abs(t.coefficient().imag()) <= tol;
                     });
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const PauliString& t : terms_) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g ", t.coefficient().real(),
                  t.coefficient().imag());
    out += buf;
    out += t.label();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::parse_text(std::string_view text, int n_qubits) {
  PauliSum s(n_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    double re = 0.0;
    double im = 0.0;
    if (!(fields >> re >> im)) {
      throw std::invalid_argument("PauliSum::parse_text: line " +
                                  std::to_string(line_no) +
                                  ": expected 're im LABEL'");
    }
    std::string label;
    std::getline(fields, label);
    s.add(PauliString::parse(label, n_qubits, Complex(re, im)));
  }
  return s;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum operator-(PauliSum a, const PauliSum& b) {
  a -= b;
  return a;
}

PauliSum operator*(PauliSum a, Complex scale) {
  a *= scale;
  return a;
}

PauliSum operator*(Complex scale, PauliSum a) {
  a *= scale;
  return a;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_width(a.n_qubits(), b.n_qubits(), "PauliSum product");
  TermAccumulator acc(a.n_qubits());
  for (const PauliString& ta : a.terms()) {
    for (const PauliString& tb : b.terms()) acc.add(multiply(ta, tb));
  }
  return acc.finish(kDedupTolerance);
}

PauliSum simplify(const PauliSum& s, double tol) {
  TermAccumulator acc(s.n_qubits());
  for (const PauliString& t : s.terms()) acc.add(t);
  return acc.finish(tol);
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same_width(a.n_qubits(), b.n_qubits(), "commutator");
  // Commuting pairs cancel; anticommuting pairs contribute 2ab.
  TermAccumulator acc(a.n_qubits());
  for (const PauliString& ta : a.terms()) {
    for (const PauliString& tb : b.terms()) {
      if (ta.commutes_with(tb)) continue;
      const PauliString p = multiply(ta, tb);
      acc.add(p.x_mask(), p.z_mask(), 2.0 * p.coefficient());
    }
  }
  return acc.finish(kDedupTolerance);
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double tol) {
  if (a.n_qubits() != b.n_qubits()) return false;
  const PauliSum diff = simplify(a - b, 0.0);
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [tol](const PauliString& t) {
                       return std::abs(t.coefficient()) <= tol;
                     });
}

bool commute(const PauliString& a, const PauliString& b,
             CommutationMode mode) {
  return mode == CommutationMode::kGeneral ? a.commutes_with(b)
                                           : a.qubitwise_commutes_with(b);
}

bool mutually_commuting(const PauliSum& s, CommutationMode mode) {
  const auto terms = s.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commute(terms[i], terms[j], mode)) return false;
    }
  }
  return true;
}

std::vector<PauliSum> partition_commuting(const PauliSum& s,
                                          CommutationMode mode) {
  std::vector<PauliString> sorted(s.terms().begin(), s.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PauliString& a, const PauliString& b) {
                     return compare_letters(a, b) < 0;
                   });
  std::vector<std::vector<PauliString>> groups;
  for (PauliString& term : sorted) {
    auto fits = [&](const std::vector<PauliString>& g) {
      return std::all_of(g.begin(), g.end(), [&](const PauliString& m) {
        return commute(term, m, mode);
      });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end()) {
      groups.emplace_back();
      it = std::prev(groups.end());
    }
    it->push_back(std::move(term));
  }
  std::vector<PauliSum> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(s.n_qubits(), std::move(g));
  return out;
}

}  // namespace fqa
