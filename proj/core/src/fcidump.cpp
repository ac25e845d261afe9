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

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace fqa {
namespace {

constexpr double kDuplicateTolerance = 1e-6;

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

int header_int(const std::string& header, const std::string& key,
               bool required, int fallback, int line) {
  const std::regex re("\\b" + key + "\\s*=\\s*([-+]?\\d+)");
  std::smatch m;
  if (!std::regex_search(header, m, re)) {
    if (required) throw FcidumpError("header lacks " + key, line);
    return fallback;
  }
  return std::stoi(m[1].str());
}

double parse_value(std::string token, int line) {
  std::replace(token.begin(), token.end(), 'D', 'E');
  std::replace(token.begin(), token.end(), 'd', 'e');
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw FcidumpError("bad value '" + token + "'", line);
  }
  return v;
}

void assign(double& slot, double value, int line) {
  if (!std::isnan(slot) && std::abs(slot - value) > kDuplicateTolerance) {
    throw FcidumpError("entry conflicts with an earlier symmetric duplicate",
                       line);
  }
  slot = value;
}

}  // namespace

MolecularIntegrals parse_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open " + path.string(), 0);
  return parse_fcidump(in);
}

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  std::string header;
  int line_no = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    ++line_no;
    header += " " + line;
    const std::string u = upper(line);
    if (u.find("&END") != std::string::npos ||
        u.find('/') != std::string::npos) {
      closed = true;
      break;
    }
  }
  const std::string head = upper(header);
  if (head.find("&FCI") == std::string::npos) {
    throw FcidumpError("missing &FCI namelist", 1);
  }
  if (!closed) throw FcidumpError("unterminated namelist", line_no);

  MolecularIntegrals ints;
  ints.n_spatial_orbitals = header_int(head, "NORB", true, 0, line_no);
  ints.n_electrons = header_int(head, "NELEC", true, 0, line_no);
  ints.ms2 = header_int(head, "MS2", false, 0, line_no);
  const int n = ints.n_spatial_orbitals;
  if (n <= 0) throw FcidumpError("NORB must be positive", line_no);
  if (ints.n_electrons < 0 || ints.n_electrons > 2 * n ||
      (ints.n_electrons + ints.ms2) % 2 != 0 ||
      std::abs(ints.ms2) > ints.n_electrons) {
    throw FcidumpError("inconsistent NELEC/MS2", line_no);
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  ints.h_core = Eigen::MatrixXd::Constant(n, n, nan);
  Tensor4 eri(n);
  eri.fill(nan);
  bool have_nuclear = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    const double value = parse_value(token, line_no);
    std::array<int, 4> idx{};
    for (int& v : idx) {
      if (!(fields >> v)) throw FcidumpError("expected four indices", line_no);
    }
    if (fields >> token) throw FcidumpError("trailing fields", line_no);
    for (int v : idx) {
      if (v < 0 || v > n) {
        throw FcidumpError("orbital index " + std::to_string(v) +
                               " out of range 0.." + std::to_string(n),
                           line_no);
      }
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (have_nuclear &&
          std::abs(ints.e_nuclear - value) > kDuplicateTolerance) {
        throw FcidumpError("repeated nuclear repulsion", line_no);
      }
      ints.e_nuclear = value;
      have_nuclear = true;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) continue;  // orbital energies are not used
      assign(ints.h_core(i - 1, j - 1), value, line_no);
      assign(ints.h_core(j - 1, i - 1), value, line_no);
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) {
        throw FcidumpError("two-electron entry with a zero index", line_no);
      }
      const int a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      for (const auto& [p, q, r, s] :
           {std::array{a, b, c, d}, std::array{b, a, c, d},
            std::array{a, b, d, c}, std::array{b, a, d, c},
            std::array{c, d, a, b}, std::array{d, c, a, b},
            std::array{c, d, b, a}, std::array{d, c, b, a}}) {
        assign(eri(p, q, r, s), value, line_no);
      }
    }
  }

  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::isnan(ints.h_core(r, c))) ints.h_core(r, c) = 0.0;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (std::isnan(eri(a, b, c, d))) eri(a, b, c, d) = 0.0;
  ints.eri = std::move(eri);
  return ints;
}

void write_fcidump(std::ostream& out, const MolecularIntegrals& ints,
                   double tol) {
  const int n = ints.n_spatial_orbitals;
  out << " &FCI NORB=" << n << ",NELEC=" << ints.n_electrons
      << ",MS2=" << ints.ms2 << ",\n  ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n  ISYM=1,\n &END\n";
  char buf[96];
  auto emit = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof(buf), "%.17g %d %d %d %d\n", v, i, j, k, l);
    out << buf;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int ij = i * (i + 1) / 2 + j;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
          if (k * (k + 1) / 2 + l > ij) continue;
          const double v = ints.eri(i, j, k, l);
          if (std::abs(v) > tol) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = ints.h_core(i, j);
      if (std::abs(v) > tol) emit(v, i + 1, j + 1, 0, 0);
    }
  }
  emit(ints.e_nuclear, 0, 0, 0, 0);
}

void write_fcidump(const std::filesystem::path& path,
                   const MolecularIntegrals& ints, double tol) {
  std::ofstream out(path);
  if (!out) throw FcidumpError("cannot write " + path.string(), 0);
  write_fcidump(out, ints, tol);
  if (!out) throw FcidumpError("write failed for " + path.string(), 0);
}

}  // namespace fqa
