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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fqa/fqa.hpp"

namespace fqa {
namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

OscillationReport detect_oscillation(const std::vector<double>& beta,
                                     const OscillationConfig& cfg) {
  if (cfg.window < 4) {
    throw std::invalid_argument("detect_oscillation: window must be >= 4");
  }
  OscillationReport report;
  const std::size_t n = beta.size();
  const std::size_t w = std::min<std::size_t>(n, cfg.window);
  if (w < 4) return report;
  const std::size_t start = n - w;

  double peak = 0.0;
  for (std::size_t i = start; i < n; ++i) peak = std::max(peak, std::abs(beta[i]));
  const double flat = cfg.flat_tolerance * std::max(1.0, peak);

  int flips = 0;
  int previous = 0;
  for (std::size_t i = start + 1; i < n; ++i) {
    const double step = beta[i] - beta[i - 1];
    const int s = std::abs(step) <= flat ? 0 : sign_of(step);
    if (s != 0 && previous != 0 && s != previous) ++flips;
    if (s != 0) previous = s;
  }
  const std::size_t diffs = w - 1;
  report.flip_rate = diffs > 1 ? static_cast<double>(flips) /
                                     static_cast<double>(diffs - 1)
                               : 0.0;

  double early = 0.0, late = 0.0;
  const std::size_t half = start + w / 2;
  for (std::size_t i = start; i < n; ++i) {
    double& slot = i < half ? early : late;
    slot = std::max(slot, std::abs(beta[i]));
  }
  report.envelope_ratio =
      early > 0.0 ? late / early
                  : (late > 0.0 ? std::numeric_limits<double>::infinity()
                                : 0.0);
  report.flagged = report.flip_rate > cfg.flip_threshold &&
                   report.envelope_ratio >= cfg.decay_ratio;
  return report;
}

OscillationReport detect_oscillation(const RunTrace& trace,
                                     const OscillationConfig& cfg) {
  OscillationReport worst;
  const std::size_t components =
      trace.records.empty() ? 0 : trace.records.front().beta.size();
  for (std::size_t c = 0; c < components; ++c) {
    const OscillationReport r = detect_oscillation(trace.beta_series(c), cfg);
    if ((r.flagged && !worst.flagged) ||
        (r.flagged == worst.flagged && r.flip_rate > worst.flip_rate)) {
      worst = r;
    }
  }
  return worst;
}

int monotone_violations(const std::vector<double>& j, double tol) {
  int count = 0;
  for (std::size_t k = 1; k < j.size(); ++k) {
    if (j[k] > j[k - 1] + tol) ++count;
  }
  return count;
}

double dominant_frequency(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 4) throw std::invalid_argument("dominant_frequency: series too short");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);

  // Zero-padded periodogram scan over (0, 1/2], then a local refinement.
  auto power = [&](double f) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = 2.0 * std::numbers::pi * f * static_cast<double>(k);
      re += (series[k] - mean) * std::cos(phase);
      im -= (series[k] - mean) * std::sin(phase);
    }
    return re * re + im * im;
  };
  const std::size_t grid = 16 * n;
  double best_f = 0.0, best_p = -1.0;
  for (std::size_t i = 1; i <= grid / 2; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(grid);
    const double p = power(f);
    if (p > best_p) {
      best_p = p;
      best_f = f;
    }
  }
  double step = 1.0 / static_cast<double>(grid);
  for (int it = 0; it < 30; ++it) {
    step *= 0.5;
    for (double f : {best_f - step, best_f + step}) {
      if (f <= 0.0 || f > 0.5) continue;
      const double p = power(f);
      if (p > best_p) {
        best_p = p;
        best_f = f;
      }
    }
  }
  return best_f;
}

}  // namespace fqa
