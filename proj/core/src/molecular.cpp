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

#include "fqa/molecular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fqa {

double MolecularIntegrals::symmetry_violation() const {
  const int n = n_spatial_orbitals;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(h_core(i, j) - h_core(j, i)));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const double v = eri(i, j, k, l);
          worst = std::max({worst, std::abs(v - eri(j, i, k, l)),
                            std::abs(v - eri(i, j, l, k)),
                            std::abs(v - eri(k, l, i, j))});
        }
      }
    }
  }
  return worst;
}

FermionSum one_body_fermions(const Eigen::MatrixXd& h_pq) {
  FermionSum f;
  for (int p = 0; p < h_pq.rows(); ++p) {
    for (int q = 0; q < h_pq.cols(); ++q) {
      if (h_pq(p, q) != 0.0) f.add(h_pq(p, q), {create(p), annihilate(q)});
    }
  }
  return f;
}

FermionSum two_body_fermions(const Tensor4& h_pqrs) {
  const int n = h_pqrs.extent();
  FermionSum f;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          const double v = h_pqrs(p, q, r, s);
          if (v == 0.0) continue;
          f.add(0.5 * v, {create(p), create(q), annihilate(r), annihilate(s)});
        }
      }
    }
  }
  return f;
}

FermionSum one_two_body_commutator_fermions(const Eigen::MatrixXd& h_pq,
                                            const Tensor4& h_pqrs) {
  const int n = h_pqrs.extent();
  FermionSum f;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = h_pq(i, j);
      if (t == 0.0) continue;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            for (int d = 0; d < n; ++d) {
              const double u = h_pqrs(a, b, c, d);
              if (u == 0.0) continue;
              const double w = 0.5 * t * u;
              if (j == a) {
                f.add(w, {create(i), create(b), annihilate(c), annihilate(d)});
              }
              if (j == b) {
                f.add(w, {create(a), create(i), annihilate(c), annihilate(d)});
              }
              if (i == c) {
                f.add(-w, {create(a), create(b), annihilate(j), annihilate(d)});
              }
              if (i == d) {
                f.add(-w, {create(a), create(b), annihilate(c), annihilate(j)});
              }
            }
          }
        }
      }
    }
  }
  return f;
}

MolecularSystem build_molecular(const MolecularIntegrals& ints,
                                double symmetry_tol) {
  const int norb = ints.n_spatial_orbitals;
  if (norb <= 0) throw std::invalid_argument("build_molecular: no orbitals");
  if (ints.h_core.rows() != norb || ints.h_core.cols() != norb ||
      ints.eri.extent() != norb) {
    throw std::invalid_argument("build_molecular: integral shape mismatch");
  }
  const double violation = ints.symmetry_violation();
  if (violation > symmetry_tol) {
    throw std::invalid_argument(
        "build_molecular: integral symmetry violated by " +
        std::to_string(violation));
  }
  const int n = 2 * norb;
  if (n > kMaxQubits) throw std::invalid_argument("build_molecular: too large");
  if (ints.n_electrons < 0 || ints.n_electrons > n ||
      (ints.n_electrons + ints.ms2) % 2 != 0 || ints.n_alpha() < 0 ||
      ints.n_beta() < 0 || ints.n_alpha() > norb || ints.n_beta() > norb) {
    throw std::invalid_argument("build_molecular: inconsistent NELEC/MS2");
  }

  MolecularSystem sys;
  sys.n_spin_orbitals = n;
  sys.n_electrons = ints.n_electrons;
  sys.n_alpha = ints.n_alpha();
  sys.n_beta = ints.n_beta();
  sys.e_nuclear = ints.e_nuclear;
  sys.h_pq = Eigen::MatrixXd::Zero(n, n);
  sys.h_pqrs = Tensor4(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p % 2 == q % 2) sys.h_pq(p, q) = ints.h_core(p / 2, q / 2);
    }
  }
  // Chemists' (ps|qr) -> operator order a_p^+ a_q^+ a_r a_s.
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (p % 2 != s % 2 || q % 2 != r % 2) continue;
          sys.h_pqrs(p, q, r, s) = ints.eri(p / 2, s / 2, q / 2, r / 2);
        }
      }
    }
  }

  sys.h1_sum = jordan_wigner(one_body_fermions(sys.h_pq), n);
  sys.h2_sum = jordan_wigner(two_body_fermions(sys.h_pqrs), n);
  sys.full = simplify(sys.h1_sum + sys.h2_sum);
  sys.feedback_obs =
      simplify(commutator(sys.h1_sum, sys.h2_sum) * Complex(0.0, 1.0));
  return sys;
}

}  // namespace fqa
