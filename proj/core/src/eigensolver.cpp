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

#include "fqa/eigensolver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fqa {
namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAULL;

Complex i_power(int k) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k & 3];
}

// Column b of h as a sparse map target -> amplitude.
void apply_to_basis(const PauliSum& h, std::uint64_t b,
                    std::unordered_map<std::uint64_t, Complex>& out) {
  out.clear();
  for (const PauliString& t : h.terms()) {
    const double sign = (std::popcount(b & t.z_mask()) & 1) ? -1.0 : 1.0;
    out[b ^ t.x_mask()] += sign * t.coefficient() * i_power(t.y_count());
  }
}

double weight_norm(const PauliSum& h) {
  double s = 0.0;
  for (const PauliString& t : h.terms()) s += std::abs(t.coefficient());
  return s;
}

void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best_mag * (1.0 + 1e-12)) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag > 0.0) v *= std::conj(v[best]) / best_mag;
}

SpectralBounds lanczos_bounds(const PauliSum& h) {
  const CompiledObservable op(h);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const int max_steps = static_cast<int>(std::min<std::size_t>(dim, 200));

  std::vector<std::vector<Complex>> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<Complex> v(dim);
  // Deterministic dense start vector.
  std::uint64_t s = 0x9E3779B97F4A7C15ULL;
  double norm2 = 0.0;
  for (auto& a : v) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    a = Complex(static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5, 0.0);
    norm2 += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm2);

  std::vector<Complex> w(dim);
  SpectralBounds last{0.0, 0.0};
  for (int step = 0; step < max_steps; ++step) {
    basis.push_back(v);
    op.apply(v, w);
    Complex a = 0.0;
    for (std::size_t i = 0; i < dim; ++i) a += std::conj(v[i]) * w[i];
    alpha.push_back(a.real());
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        Complex c = 0.0;
        for (std::size_t i = 0; i < dim; ++i) c += std::conj(q[i]) * w[i];
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
      }
    }
    double b = 0.0;
    for (const auto& x : w) b += std::norm(x);
    b = std::sqrt(b);

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        t, Eigen::EigenvaluesOnly);
    const SpectralBounds now{es.eigenvalues()(0), es.eigenvalues()(m - 1)};
    const double scale = std::max(1.0, std::max(std::abs(now.min),
                                                std::abs(now.max)));
    const bool converged = step > 4 &&
                           std::abs(now.min - last.min) < 1e-12 * scale &&
                           std::abs(now.max - last.max) < 1e-12 * scale;
    last = now;
    if (converged || b < 1e-12 * scale) break;
    beta.push_back(b);
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
  }
  return last;
}

}  // namespace

void SectorSpec::validate(int n_qubits) const {
  const bool spin_mode = n_up.has_value() || n_down.has_value();
  if (spin_mode == n_total.has_value()) {
    throw std::invalid_argument(
        "SectorSpec: set either (n_up, n_down) or n_total");
  }
  if (spin_mode) {
    if (!n_up || !n_down) {
      throw std::invalid_argument("SectorSpec: n_up and n_down go together");
    }
    if (n_qubits % 2 != 0 || *n_up < 0 || *n_down < 0 ||
        *n_up > n_qubits / 2 || *n_down > n_qubits / 2) {
      throw std::invalid_argument("SectorSpec: spin counts do not fit " +
                                  std::to_string(n_qubits) + " qubits");
    }
  } else if (*n_total < 0 || *n_total > n_qubits) {
    throw std::invalid_argument("SectorSpec: n_total does not fit register");
  }
}

bool SectorSpec::contains(std::uint64_t b) const {
  if (n_total) return std::popcount(b) == *n_total;
  return std::popcount(b & kEvenBits) == *n_up &&
         std::popcount(b & kOddBits) == *n_down;
}

std::vector<std::uint64_t> sector_basis(int n_qubits, const SectorSpec& s) {
  s.validate(n_qubits);
  if (n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("sector_basis: register too wide");
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (s.contains(b)) out.push_back(b);
  }
  return out;
}

double EigenResult::ground_space_overlap(const StateVector& psi) const {
  double sum = 0.0;
  for (const StateVector& g : ground_space) sum += overlap_squared(g, psi);
  return std::min(1.0, sum);
}

EigenResult sector_ground_state(const PauliSum& h, const SectorSpec& sector) {
  const int n = h.n_qubits();
  const std::vector<std::uint64_t> basis = sector_basis(n, sector);
  if (basis.empty()) {
    throw std::invalid_argument("sector_ground_state: empty sector");
  }
  if (basis.size() > kMaxDenseSector) {
    throw std::invalid_argument("sector_ground_state: sector dimension " +
                                std::to_string(basis.size()) +
                                " exceeds the dense limit");
  }
  if (!h.is_hermitian()) {
    throw std::invalid_argument("sector_ground_state: h is not Hermitian");
  }
  const PauliSum hs = simplify(h);
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  index.reserve(basis.size() * 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i], static_cast<Eigen::Index>(i));
  }

  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const double scale = std::max(1.0, weight_norm(hs));
  std::unordered_map<std::uint64_t, Complex> column;
  bool real = true;
  for (Eigen::Index j = 0; j < dim; ++j) {
    apply_to_basis(hs, basis[static_cast<std::size_t>(j)], column);
    for (const auto& [target, amp] : column) {
      if (std::abs(amp) <= 1e-14 * scale) continue;
      const auto it = index.find(target);
      if (it == index.end()) {
        if (std::abs(amp) > 1e-10 * scale) {
          throw std::invalid_argument(
              "sector_ground_state: operator does not conserve the sector");
        }
        continue;
      }
      m(it->second, j) = amp;
      if (std::abs(amp.imag()) > 0.0) real = false;
    }
  }

  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  if (real) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
    values = es.eigenvalues();
    vectors = es.eigenvectors().cast<Complex>();
  } else {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    values = es.eigenvalues();
    vectors = es.eigenvectors();
  }

  EigenResult r;
  r.ground_energy = values(0);
  r.spectrum.assign(values.data(), values.data() + values.size());
  const double tol = 1e-8 * std::max(1.0, std::abs(r.ground_energy));
  int deg = 1;
  while (deg < dim && values(deg) - values(0) <= tol) ++deg;
  r.degeneracy = deg;
  r.gap = deg < dim ? values(deg) - values(0)
                    : std::numeric_limits<double>::infinity();

  const double norm_bound = std::max(std::abs(values(0)),
                                     std::abs(values(dim - 1)));
  for (int g = 0; g < deg; ++g) {
    Eigen::VectorXcd v = vectors.col(g);
    fix_phase(v);
    const double residual = (m * v - values(g) * v).norm();
    if (residual > 1e-8 * std::max(1.0, norm_bound)) {
      throw std::runtime_error("sector_ground_state: residual " +
                               std::to_string(residual) + " too large");
    }
    std::vector<Complex> amps(std::size_t{1} << n, Complex(0.0));
    for (Eigen::Index i = 0; i < dim; ++i) {
      amps[basis[static_cast<std::size_t>(i)]] = v(i);
    }
    r.ground_space.push_back(StateVector::from_amplitudes(n, std::move(amps)));
  }
  r.ground_state = r.ground_space.front();
  return r;
}

Eigen::MatrixXcd to_dense(const PauliSum& h) {
  const int n = h.n_qubits();
  if (n > 14) throw std::invalid_argument("to_dense: register too wide");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliString& t : h.terms()) {
    const Complex base = t.coefficient() * i_power(t.y_count());
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      const double sign = (std::popcount(ub & t.z_mask()) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(ub ^ t.x_mask()), b) += sign * base;
    }
  }
  return m;
}

SpectralBounds extremal_eigenvalues(const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("extremal_eigenvalues: h is not Hermitian");
  }
  if (h.n_qubits() <= 10) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        to_dense(h), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
  }
  return lanczos_bounds(simplify(h));
}

double spectral_norm(const PauliSum& h) {
  const SpectralBounds b = extremal_eigenvalues(h);
  return std::max(std::abs(b.min), std::abs(b.max));
}

}  // namespace fqa
