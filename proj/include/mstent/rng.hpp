// Copyright 2026 The mstent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSTENT_RNG_HPP
#define MSTENT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace mstent {

/// Draws per deterministic substream. Fixed so results never depend on the
/// number of worker threads.
inline constexpr std::size_t kChunkSize = 16384;

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Generator for substream (seed, chunk).
Rng substream(std::uint64_t seed, std::uint64_t chunk);

/// Engine plus the stateful variate adaptors used by the samplers.
struct Stream {
  Stream(std::uint64_t seed, std::uint64_t chunk) : engine(substream(seed, chunk)) {}

  double gaussian() { return normal(engine); }
  double uniform() { return unif(engine); }
  /// Gamma(shape, rate) variate.
  double gamma(double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0 / rate)(engine);
  }

  Rng engine;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unif{0.0, 1.0};
};

/// 0 means one worker per hardware thread.
unsigned resolve_threads(unsigned requested);

std::size_t chunk_count(std::size_t n);

/**
 * Calls fn(chunk, begin, count) for every chunk of [0, n). Chunks are handed
 * out to up to \p threads workers; fn must only write chunk-local state.
 */
void for_each_chunk(std::size_t n, unsigned threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace mstent

#endif  // MSTENT_RNG_HPP
