//
// Copyright 2026 The dpsample Authors
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
//

#ifndef DPSAMPLE_RANDOM_H_
#define DPSAMPLE_RANDOM_H_

#include <array>
#include <cstdint>
#include <limits>

namespace dpsample {

// SplitMix64 finalizer. Used both to expand a 64-bit seed into generator state
// and to derive child seeds.
constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of the child stream with index `stream` of a source seeded by `seed`:
//
//   child = SplitMix64(seed ^ SplitMix64(stream ^ 0xA0761D6478BD642F))
//
// The child seed depends only on (seed, stream), never on how much of the
// parent stream has been consumed, so derived streams are reproducible.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return SplitMix64(seed ^ SplitMix64(stream ^ 0xA0761D6478BD642FULL));
}

// Seedable pseudo-random stream (xoshiro256++ engine). Identical seeds give
// identical streams on every platform: all variate generation is implemented
// here rather than delegated to <random> distributions, whose algorithms are
// implementation-defined.
//
// Move-only: a stream has a single owner. Code that needs parallel streams
// calls Derive() with distinct indices.
class RandomSource {
 public:
  using result_type = uint64_t;

  explicit RandomSource(uint64_t seed);

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) = default;
  RandomSource& operator=(RandomSource&&) = default;

  uint64_t seed() const { return seed_; }

  RandomSource Derive(uint64_t stream) const {
    return RandomSource(DeriveSeed(seed_, stream));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

  uint64_t NextU64() {
    const uint64_t result = Rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1).
  double UniformOpen() {
    return (static_cast<double>(NextU64() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Unbiased integer in [0, bound). bound must be positive.
  uint64_t UniformInt(uint64_t bound);

  // Standard normal variate (exact ziggurat, 128 layers).
  double StandardNormal();

  // Exponential variate with rate 1.
  double StandardExponential();

 private:
  static constexpr uint64_t Rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  uint64_t seed_;
  std::array<uint64_t, 4> state_;
};

}  // namespace dpsample

#endif  // DPSAMPLE_RANDOM_H_
