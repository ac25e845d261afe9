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

#include "fqa/fcidump.hpp"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

namespace fqa {
namespace {

constexpr const char* kTiny = R"( &FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,1,
  ISYM=1,
 &END
  0.5    1 1 1 1
  0.25D0 2 1 1 1
  0.125  2 2 1 1
  0.3    2 1 2 1
  0.6    2 2 2 2
 -1.25   1 1 0 0
  0.1    2 1 0 0
 -0.5    2 2 0 0
  0.7    0 0 0 0
)";

MolecularIntegrals parse(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

TEST(Fcidump, ParsesHeaderAndExpandsSymmetry) {
  const MolecularIntegrals ints = parse(kTiny);
  EXPECT_EQ(ints.n_spatial_orbitals, 2);
  EXPECT_EQ(ints.n_electrons, 2);
  EXPECT_EQ(ints.ms2, 0);
  EXPECT_DOUBLE_EQ(ints.e_nuclear, 0.7);
  EXPECT_DOUBLE_EQ(ints.h_core(0, 0), -1.25);
  EXPECT_DOUBLE_EQ(ints.h_core(0, 1), 0.1);
  EXPECT_DOUBLE_EQ(ints.h_core(1, 0), 0.1);
  // (21|11) in all eight index orders; Fortran exponent accepted.
  for (auto [i, j, k, l] : {std::array{1, 0, 0, 0}, std::array{0, 1, 0, 0},
                            std::array{0, 0, 1, 0}, std::array{0, 0, 0, 1}}) {
    EXPECT_DOUBLE_EQ(ints.eri(i, j, k, l), 0.25);
  }
  EXPECT_DOUBLE_EQ(ints.eri(0, 1, 1, 0), 0.3);
  EXPECT_DOUBLE_EQ(ints.eri(1, 1, 0, 0), 0.125);
  EXPECT_DOUBLE_EQ(ints.symmetry_violation(), 0.0);
  EXPECT_EQ(ints.n_alpha(), 1);
  EXPECT_EQ(ints.n_beta(), 1);
}

TEST(Fcidump, SlashTerminatesNamelist) {
  const MolecularIntegrals ints = parse(
      "&FCI NORB=1, NELEC=1, MS2=1\n/\n 1.0 1 1 1 1\n -2.0 1 1 0 0\n");
  EXPECT_EQ(ints.n_alpha(), 1);
  EXPECT_EQ(ints.n_beta(), 0);
  EXPECT_DOUBLE_EQ(ints.h_core(0, 0), -2.0);
}

TEST(Fcidump, WriteReadRoundTrip) {
  const MolecularIntegrals a = parse(kTiny);
  std::stringstream buf;
  write_fcidump(buf, a);
  const MolecularIntegrals b = parse_fcidump(buf);
  EXPECT_EQ(b.n_spatial_orbitals, a.n_spatial_orbitals);
  EXPECT_EQ(b.n_electrons, a.n_electrons);
  EXPECT_EQ(b.e_nuclear, a.e_nuclear);
  EXPECT_EQ(b.h_core, a.h_core);
  const auto da = a.eri.data();
  const auto db = b.eri.data();
  ASSERT_EQ(da.size(), db.size());
  for (std::size_t i = 0; i < da.size(); ++i) EXPECT_EQ(da[i], db[i]);
}

TEST(Fcidump, FixtureFileRoundTrip) {
  const auto path =
      std::filesystem::path(FQA_SOURCE_DIR) / "data" / "fixtures" / "lih.fcidump";
  const MolecularIntegrals a = parse_fcidump(path);
  EXPECT_EQ(a.n_spatial_orbitals, 6);
  const auto tmp = std::filesystem::temp_directory_path() / "fqa_lih_rt.fcidump";
  write_fcidump(tmp, a);
  const MolecularIntegrals b = parse_fcidump(tmp);
  std::filesystem::remove(tmp);
  EXPECT_EQ(b.h_core, a.h_core);
  EXPECT_EQ(b.e_nuclear, a.e_nuclear);
}

struct BadInput {
  const char* text;
  int line;  // where the parser noticed the problem
};

class FcidumpErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(FcidumpErrors, ReportsLine) {
  try {
    parse(GetParam().text);
    FAIL() << "accepted: " << GetParam().text;
  } catch (const FcidumpError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, FcidumpErrors,
    ::testing::Values(
        BadInput{"&FCI NELEC=2\n&END\n", 2},                       // no NORB
        BadInput{"&FCI NORB=2\n&END\n", 2},                        // no NELEC
        BadInput{"&FCI NORB=1,NELEC=2\n&END\n 1.0 2 1 1 1\n", 3},  // range
        BadInput{"&FCI NORB=1,NELEC=2\n&END\n 1.0 1 0 1 1\n", 3},  // zero index
        BadInput{"&FCI NORB=1,NELEC=2\n&END\n 1.0 1 1 1 1 7\n", 3},
        BadInput{"&FCI NORB=1,NELEC=2\n&END\n abc 1 1 1 1\n", 3},
        BadInput{"&FCI NORB=2,NELEC=2\n&END\n 1.0 2 1 1 1\n 2.0 1 2 1 1\n",
                 4},  // inconsistent duplicate
        BadInput{"&FCI NORB=2,NELEC=2\n", 1}));  // no terminator

TEST(Fcidump, MissingFileThrows) {
  EXPECT_THROW(parse_fcidump(std::filesystem::path("/nonexistent/x.fcidump")),
               std::exception);
}

}  // namespace
}  // namespace fqa
