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

#include "fqa/statevector.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"

namespace fqa {
namespace {

using testing::kron_matrix;
using testing::to_vector;

TEST(StateVector, ConstructionAndNorm) {
  const StateVector zero(3);
  EXPECT_EQ(zero.dimension(), 8u);
  EXPECT_EQ(zero[0], Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(zero.norm(), 1.0);
  const StateVector b = StateVector::basis(3, 5);
  EXPECT_EQ(b[5], Complex(1.0, 0.0));
  const StateVector s =
      StateVector::from_amplitudes(1, {Complex(3.0, 0.0), Complex(0.0, 4.0)});
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
  EXPECT_THROW(StateVector::basis(2, 4), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes(2, {1.0, 0.0}),
               std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes(1, {0.0, 0.0}),
               std::invalid_argument);
}

TEST(StateVector, InnerProduct) {
  std::mt19937_64 rng(1);
  const StateVector a = testing::random_state(rng, 3);
  const StateVector b = testing::random_state(rng, 3);
  const Complex expected = to_vector(a).dot(to_vector(b));
  EXPECT_LT(std::abs(inner_product(a, b) - expected), 1e-14);
  EXPECT_NEAR(overlap_squared(a, b), std::norm(expected), 1e-14);
  EXPECT_THROW(inner_product(a, StateVector(2)), std::invalid_argument);
}

TEST(Kernels, PauliExponentialMatchesDense) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const PauliString p =
        testing::random_pauli_sum(rng, n, 1, true, true, true).terms()[0];
    StateVector s = testing::random_state(rng, n);
    const Eigen::VectorXcd expected =
        testing::expm_hermitian(kron_matrix(p), 0.37) * to_vector(s);
    apply_pauli_exponential(s, p, 0.37);
    EXPECT_LT((to_vector(s) - expected).norm(), 1e-13);
  }
}

TEST(Kernels, PauliExponentialRejectsComplexCoefficient) {
  StateVector s(1);
  EXPECT_THROW(
      apply_pauli_exponential(s, PauliString::parse("X0", 1, Complex(0, 1)), 1.0),
      std::invalid_argument);
}

TEST(Kernels, GroupExponentialMatchesDense) {
  std::mt19937_64 rng(4);
  const PauliSum diag = testing::random_pauli_sum(rng, 4, 6, false, false, true);
  StateVector s = testing::random_state(rng, 4);
  const Eigen::VectorXcd expected =
      testing::expm_hermitian(kron_matrix(diag), -0.8) * to_vector(s);
  apply_group_exponential(s, diag, -0.8, true);
  EXPECT_LT((to_vector(s) - expected).norm(), 1e-13);
}

TEST(Kernels, GroupExponentialVerifiesCommutation) {
  PauliSum g(1);
  g.add(PauliString::parse("X0", 1));
  g.add(PauliString::parse("Z0", 1));
  StateVector s(1);
  EXPECT_THROW(apply_group_exponential(s, g, 0.1, true), std::invalid_argument);
}

TEST(CompiledObservable, ApplyAndExpectationMatchDense) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const PauliSum h = testing::random_pauli_sum(rng, n, 10, true, true, true);
    const CompiledObservable c(h);
    const StateVector s = testing::random_state(rng, n);
    const Eigen::MatrixXcd m = kron_matrix(h);
    std::vector<Complex> out(s.dimension());
    c.apply(s.amplitudes(), out);
    const Eigen::VectorXcd expected = m * to_vector(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
      EXPECT_LT(std::abs(out[i] - expected(static_cast<Eigen::Index>(i))),
                1e-13);
    }
    EXPECT_NEAR(c.expectation(s), testing::dense_expectation(m, to_vector(s)),
                1e-12);
    EXPECT_NEAR(expectation(s, h), c.expectation(s), 1e-12);
  }
}

TEST(CompiledObservable, RejectsNonHermitianExpectation) {
  PauliSum h(1);
  h.add(PauliString::parse("Z0", 1, Complex(0.0, 1.0)));
  EXPECT_THROW(CompiledObservable(h).expectation(StateVector(1)),
               std::invalid_argument);
}

TEST(Evolution, TaylorMatchesDenseExponential) {
  std::mt19937_64 rng(8);
  const PauliSum h = testing::random_pauli_sum(rng, 5, 12, true, true, true);
  StateVector s = testing::random_state(rng, 5);
  const Eigen::VectorXcd expected =
      testing::expm_hermitian(kron_matrix(h), 2.3) * to_vector(s);
  apply_evolution(s, CompiledObservable(h), 2.3);
  EXPECT_LT((to_vector(s) - expected).norm(), 1e-11);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

}  // namespace
}  // namespace fqa
