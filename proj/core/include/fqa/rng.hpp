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

#include <array>
#include <cstdint>
#include <span>

namespace fqa {

/// Philox4x32-10 counter-based block cipher.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter coordinates that select an independent substream.
struct StreamId {
  std::uint32_t layer = 0;
  std::uint32_t iteration = 0;
  std::uint32_t purpose = 0;
};

/**
 * Sequential draws from one Philox substream. The seed is the key; the
 * counter words are (draw block, layer, iteration, purpose), so streams for
 * different layers never overlap and can be generated in any order.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamId id);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint32_t, 2> key_;
  StreamId id_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

/// Index i with cdf[i-1] <= u < cdf[i] for u uniform; `cdf` is cumulative
/// and non-decreasing, its last entry the total mass.
std::size_t sample_cdf(std::span<const double> cdf, RngStream& rng);

}  // namespace fqa
