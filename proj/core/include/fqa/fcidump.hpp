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

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fqa/integrals.hpp"

namespace fqa {

/// Malformed FCIDUMP input; `line()` is 1-based, 0 when not line-specific.
class FcidumpError : public std::runtime_error {
 public:
  FcidumpError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "FCIDUMP line " + std::to_string(line) +
                                          ": " + what
                                    : "FCIDUMP: " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/**
 * Reads an FCIDUMP file. Integrals are expanded to full tensors through the
 * 8-fold real-orbital symmetry; eri stays in chemists' notation. Conflicting
 * duplicate entries (difference above 1e-6) are rejected.
 */
MolecularIntegrals parse_fcidump(const std::filesystem::path& path);
MolecularIntegrals parse_fcidump(std::istream& in);

/// Writes the symmetry-unique elements with |value| > `tol` at 17
/// significant digits.
void write_fcidump(std::ostream& out, const MolecularIntegrals& ints,
                   double tol = 0.0);
void write_fcidump(const std::filesystem::path& path,
                   const MolecularIntegrals& ints, double tol = 0.0);

}  // namespace fqa
