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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqa/fqa.hpp"

namespace fqa {

/// Ordered key/value pairs written ahead of the trace rows.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// A trace flattened to named numeric columns; NaN marks an empty cell.
struct TraceTable {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of `name` in columns; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> column_values(std::string_view name) const;
};

enum class TraceFormat { kCsv, kJson };

TraceFormat parse_trace_format(std::string_view name);

/// Columns: k, beta..., [beta_feedback...], [a...], [a_exact...], j_value,
/// [overlap]. Row 0 is psi_0.
TraceTable to_table(const RunTrace& trace, Metadata metadata = {});

/// "# key = value" lines, a header row, then %.17g values.
void write_csv(std::ostream& out, const TraceTable& table);
/// {"metadata": {...}, "columns": [...], "records": [{...}, ...]}.
void write_json(std::ostream& out, const TraceTable& table);

TraceTable read_csv(std::istream& in);
TraceTable read_json(std::istream& in);

/// Writes to a temporary sibling and renames it over `path`.
void write_table(const std::filesystem::path& path, const TraceTable& table,
                 TraceFormat format);
void write_trace(const std::filesystem::path& path, const RunTrace& trace,
                 TraceFormat format, const Metadata& metadata = {});

/// %.17g rendering.
std::string format_double(double v);

}  // namespace fqa
