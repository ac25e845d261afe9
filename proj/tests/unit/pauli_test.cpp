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

#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"

namespace fqa {
namespace {

using testing::kron_matrix;

TEST(PauliString, ParseAndLabelRoundTrip) {
  const PauliString p = PauliString::parse("Z2 X0 Y1", 4);
  EXPECT_EQ(p.label(), "X0 Y1 Z2");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.x_mask(), 0b011u);
  EXPECT_EQ(p.z_mask(), 0b110u);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_TRUE(PauliString::parse("I", 3).is_identity());
  EXPECT_TRUE(PauliString::parse("", 3).is_identity());
}

TEST(PauliString, RejectsMalformedLabels) {
  EXPECT_THROW(PauliString::parse("X0 Z0", 2), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("X5", 2), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("Q1", 2), std::invalid_argument);
  EXPECT_THROW(PauliString(0), std::invalid_argument);
}

TEST(PauliString, FromMasksMatchesParse) {
  const PauliString a = PauliString::from_masks(3, 0b011, 0b110, 2.0);
  const PauliString b = PauliString::parse("X0 Y1 Z2", 3, 2.0);
  EXPECT_TRUE(a.same_letters(b));
  EXPECT_EQ(a.coefficient(), b.coefficient());
}

TEST(PauliString, SingleQubitProducts) {
  const PauliString x = PauliString::parse("X0", 1);
  const PauliString y = PauliString::parse("Y0", 1);
  const PauliString z = PauliString::parse("Z0", 1);
  EXPECT_EQ((x * y).label(), "Z0");
  EXPECT_EQ((x * y).coefficient(), Complex(0, 1));
  EXPECT_EQ((y * x).coefficient(), Complex(0, -1));
  EXPECT_EQ((z * x).label(), "Y0");
  EXPECT_EQ((z * x).coefficient(), Complex(0, 1));
  EXPECT_TRUE((y * y).is_identity());
  EXPECT_EQ((y * y).coefficient(), Complex(1, 0));
}

TEST(PauliString, ProductMatchesKroneckerOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const PauliSum a = testing::random_pauli_sum(rng, n, 1, true, true, true);
    const PauliSum b = testing::random_pauli_sum(rng, n, 1, true, true, true);
    const PauliString pa = a.terms()[0];
    const PauliString pb = b.terms()[0];
    const Eigen::MatrixXcd expected = kron_matrix(pa) * kron_matrix(pb);
    EXPECT_LT((kron_matrix(pa * pb) - expected).norm(), 1e-12);
    const bool dense_commute =
        (expected - kron_matrix(pb) * kron_matrix(pa)).norm() < 1e-12;
    EXPECT_EQ(pa.commutes_with(pb), dense_commute);
  }
}

TEST(PauliString, QubitwiseCommutationIsStricter) {
  const PauliString xx = PauliString::parse("X0 X1", 2);
  const PauliString zz = PauliString::parse("Z0 Z1", 2);
  EXPECT_TRUE(xx.commutes_with(zz));
  EXPECT_FALSE(xx.qubitwise_commutes_with(zz));
  EXPECT_TRUE(commute(xx, zz, CommutationMode::kGeneral));
  EXPECT_FALSE(commute(xx, zz, CommutationMode::kQubitwise));
}

TEST(PauliSum, SimplifyMergesAndDrops) {
  PauliSum s(2);
  s.add(PauliString::parse("Z0", 2, 1.0));
  s.add(PauliString::parse("Z0", 2, -1.0));
  s.add(PauliString::parse("X1", 2, 0.5));
  s.add(PauliString::parse("X1", 2, 0.25));
  s.add(PauliString::parse("Y0", 2, 1e-14));
  const PauliSum t = simplify(s);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.terms()[0].label(), "X1");
  EXPECT_DOUBLE_EQ(t.terms()[0].coefficient().real(), 0.75);
}

TEST(PauliSum, IdentityHandling) {
  PauliSum s = PauliSum::identity(3, 2.5);
  s.add(PauliString::parse("Z1", 3));
  EXPECT_EQ(s.identity_coefficient(), Complex(2.5, 0));
  EXPECT_EQ(s.without_identity().size(), 1u);
  EXPECT_EQ(s.without_identity().identity_coefficient(), Complex(0, 0));
}

TEST(PauliSum, HermitianCheck) {
  PauliSum s(1);
  s.add(PauliString::parse("X0", 1, 1.0));
  EXPECT_TRUE(s.is_hermitian());
  s.add(PauliString::parse("Z0", 1, Complex(0, 1)));
  EXPECT_FALSE(s.is_hermitian());
}

TEST(PauliSum, ArithmeticMatchesDense) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliSum a = testing::random_pauli_sum(rng, 3, 4, true, true, true);
    const PauliSum b = testing::random_pauli_sum(rng, 3, 5, true, true, true);
    const Eigen::MatrixXcd ma = kron_matrix(a);
    const Eigen::MatrixXcd mb = kron_matrix(b);
    EXPECT_LT((kron_matrix(a + b) - (ma + mb)).norm(), 1e-12);
    EXPECT_LT((kron_matrix(a - b) - (ma - mb)).norm(), 1e-12);
    EXPECT_LT((kron_matrix(a * b) - ma * mb).norm(), 1e-12);
    EXPECT_LT((kron_matrix(commutator(a, b)) - (ma * mb - mb * ma)).norm(),
              1e-12);
    EXPECT_LT((kron_matrix(a * Complex(0, 2)) - Complex(0, 2) * ma).norm(),
              1e-12);
  }
}

TEST(PauliSum, ApproxEqualIgnoresOrder) {
  PauliSum a(2);
  a.add(PauliString::parse("X0", 2, 1.0));
  a.add(PauliString::parse("Z1", 2, 2.0));
  PauliSum b(2);
  b.add(PauliString::parse("Z1", 2, 2.0));
  b.add(PauliString::parse("X0", 2, 1.0));
  EXPECT_TRUE(approx_equal(a, b));
  b.add(PauliString::parse("X0", 2, 1e-6));
  EXPECT_FALSE(approx_equal(a, b));
}

TEST(PauliSum, TextRoundTrip) {
  std::mt19937_64 rng(3);
  const PauliSum a = testing::random_pauli_sum(rng, 4, 8, true, true, true);
  const PauliSum b = PauliSum::parse_text(a.to_text(), 4);
  EXPECT_TRUE(approx_equal(a, b, 0.0));
}

TEST(PauliSum, WidthMismatchThrows) {
  PauliSum a(2);
  EXPECT_THROW(a.add(PauliString::parse("X0", 3)), std::invalid_argument);
  EXPECT_THROW(a + PauliSum(3), std::invalid_argument);
}

class PartitionTest : public ::testing::TestWithParam<CommutationMode> {};

TEST_P(PartitionTest, GroupsCommuteAndCoverEveryTerm) {
  std::mt19937_64 rng(5);
  const PauliSum s = testing::random_pauli_sum(rng, 5, 40, true, true, true);
  const auto groups = partition_commuting(s, GetParam());
  PauliSum total(5);
  for (const PauliSum& g : groups) {
    EXPECT_TRUE(mutually_commuting(g, GetParam()));
    total += g;
  }
  EXPECT_TRUE(approx_equal(total, s, 0.0));
}

INSTANTIATE_TEST_SUITE_P(Modes, PartitionTest,
                         ::testing::Values(CommutationMode::kGeneral,
                                           CommutationMode::kQubitwise));

}  // namespace
}  // namespace fqa
