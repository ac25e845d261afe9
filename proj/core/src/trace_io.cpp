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

#include "fqa/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace fqa {
namespace {

constexpr double kEmpty = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_cell(const std::string& cell) {
  const std::string t = trim(cell);
  if (t.empty()) return kEmpty;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') {
    throw std::runtime_error("trace: bad numeric cell '" + t + "'");
  }
  return v;
}

std::vector<std::string> labelled(const std::string& stem,
                                  const std::vector<std::string>& labels,
                                  std::size_t count) {
  if (count == 1) return {stem};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(stem + "_" +
                  (i < labels.size() ? labels[i] : std::to_string(i)));
  }
  return out;
}

void append(std::vector<double>& row, const std::vector<double>& values,
            std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    row.push_back(i < values.size() ? values[i] : kEmpty);
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::size_t TraceTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("trace has no column '" + std::string(name) + "'");
}

std::vector<double> TraceTable::column_values(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  for (const auto& row : rows) out.push_back(c < row.size() ? row[c] : kEmpty);
  return out;
}

TraceFormat parse_trace_format(std::string_view name) {
  if (name == "csv") return TraceFormat::kCsv;
  if (name == "json") return TraceFormat::kJson;
  throw std::invalid_argument("unknown output format '" + std::string(name) +
                              "'");
}

TraceTable to_table(const RunTrace& trace, Metadata metadata) {
  TraceTable table;
  table.metadata = std::move(metadata);
  std::vector<const LayerRecord*> all;
  if (trace.initial) all.push_back(&*trace.initial);
  for (const LayerRecord& r : trace.records) all.push_back(&r);

  std::size_t n_beta = trace.beta_labels.size();
  std::size_t n_a = 0, n_exact = 0;
  bool carries_offset = false, has_overlap = false;
  for (const LayerRecord* r : all) {
    n_beta = std::max(n_beta, r->beta.size());
    n_a = std::max(n_a, r->a_value.size());
    n_exact = std::max(n_exact, r->a_exact.size());
    if (!r->beta_feedback.empty() && r->beta_feedback != r->beta) {
      carries_offset = true;
    }
    has_overlap = has_overlap || r->overlap.has_value();
  }
  const bool anneal = trace.algorithm == "anneal";

  table.columns.push_back("k");
  auto add = [&](const std::vector<std::string>& names) {
    table.columns.insert(table.columns.end(), names.begin(), names.end());
  };
  if (anneal) {
    add(trace.beta_labels);
  } else {
    add(labelled("beta", trace.beta_labels, n_beta));
  }
  if (carries_offset) add(labelled("beta_feedback", trace.beta_labels, n_beta));
  if (n_a > 0) add(labelled("a", trace.beta_labels, n_a));
  if (n_a == 1) table.columns.back() = "a_value";
  if (n_exact > 0) add(labelled("a_exact", trace.beta_labels, n_exact));
  table.columns.push_back("j_value");
  if (has_overlap) table.columns.push_back("overlap");

  for (const LayerRecord* r : all) {
    std::vector<double> row{static_cast<double>(r->k)};
    append(row, r->beta, n_beta);
    if (carries_offset) append(row, r->beta_feedback, n_beta);
    append(row, r->a_value, n_a);
    append(row, r->a_exact, n_exact);
    row.push_back(r->j_value);
    if (has_overlap) row.push_back(r->overlap.value_or(kEmpty));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(std::ostream& out, const TraceTable& table) {
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << " = " << value << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const TraceTable& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
  doc["columns"] = table.columns;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
      if (std::isnan(row[i])) {
        rec[table.columns[i]] = nullptr;
      } else {
        rec[table.columns[i]] = row[i];
      }
    }
    doc["records"].push_back(std::move(rec));
  }
  out << doc.dump(2) << '\n';
}

TraceTable read_csv(std::istream& in) {
  TraceTable table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#", 0) == 0) {
      const std::string body = line.substr(1);
      const auto eq = body.find(" = ");
      if (eq == std::string::npos) continue;
      table.metadata.emplace_back(trim(body.substr(0, eq)),
                                  body.substr(eq + 3));
      continue;
    }
    if (line.empty()) continue;
    if (!header) {
      for (const std::string& c : split(line, ',')) {
        table.columns.push_back(trim(c));
      }
      header = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& c : split(line, ',')) row.push_back(parse_cell(c));
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("trace: row width does not match header");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TraceTable read_json(std::istream& in) {
  const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
  TraceTable table;
  for (const auto& [key, value] : doc.at("metadata").items()) {
    table.metadata.emplace_back(key, value.get<std::string>());
  }
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& rec : doc.at("records")) {
    std::vector<double> row;
    for (const std::string& c : table.columns) {
      const auto it = rec.find(c);
      row.push_back(it == rec.end() || it->is_null() ? kEmpty
                                                     : it->get<double>());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_table(const std::filesystem::path& path, const TraceTable& table,
                 TraceFormat format) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(
                      std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    if (format == TraceFormat::kCsv) {
      write_csv(out, table);
    } else {
      write_json(out, table);
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move trace into " + path.string() +
                             ": " + ec.message());
  }
}

void write_trace(const std::filesystem::path& path, const RunTrace& trace,
                 TraceFormat format, const Metadata& metadata) {
  write_table(path, to_table(trace, metadata), format);
}

}  // namespace fqa
