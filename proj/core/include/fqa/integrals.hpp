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

#include <algorithm>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fqa {

/// Dense rank-4 tensor of doubles with a uniform extent.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int extent)
      : extent_(extent),
        data_(static_cast<std::size_t>(extent) * extent * extent * extent,
              0.0) {}

  int extent() const { return extent_; }

  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const {
    return data_[index(i, j, k, l)];
  }

  std::span<const double> data() const { return data_; }
  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    const auto n = static_cast<std::size_t>(extent_);
    return ((static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
            static_cast<std::size_t>(k)) *
               n +
           static_cast<std::size_t>(l);
  }

  int extent_ = 0;
  std::vector<double> data_;
};

/**
 * Spatial-orbital integrals as read from an FCIDUMP file. `eri` is kept in
 * chemists' notation, eri(i,j,k,l) = (ij|kl).
 */
struct MolecularIntegrals {
  int n_spatial_orbitals = 0;
  int n_electrons = 0;
  int ms2 = 0;
  Eigen::MatrixXd h_core;
  Tensor4 eri;
  double e_nuclear = 0.0;

  int n_alpha() const { return (n_electrons + ms2) / 2; }
  int n_beta() const { return (n_electrons - ms2) / 2; }

  /// Largest violation of h_core symmetry or 8-fold eri symmetry.
  double symmetry_violation() const;
};

}  // namespace fqa
