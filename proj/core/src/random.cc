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

#include "dpsample/random.h"

#include <cmath>

namespace dpsample {
namespace {

// Ziggurat tables for the standard normal density, following Doornik's
// ZIGNOR layout: 128 blocks of equal area V, the bottom block holding the
// tail beyond R.
constexpr int kZigLayers = 128;
constexpr double kZigR = 3.442619855899;
constexpr double kZigV = 9.91256303526217e-3;

struct ZigguratTables {
  double x[kZigLayers + 1];
  double ratio[kZigLayers];

  ZigguratTables() {
    double f = std::exp(-0.5 * kZigR * kZigR);
    x[0] = kZigV / f;
    x[1] = kZigR;
    x[kZigLayers] = 0.0;
    for (int i = 2; i < kZigLayers; ++i) {
      x[i] = std::sqrt(-2.0 * std::log(kZigV / x[i - 1] + f));
      f = std::exp(-0.5 * x[i] * x[i]);
    }
    for (int i = 0; i < kZigLayers; ++i) ratio[i] = x[i + 1] / x[i];
  }
};

const ZigguratTables& Tables() {
  static const ZigguratTables tables;
  return tables;
}

}  // namespace

RandomSource::RandomSource(uint64_t seed) : seed_(seed) {
  uint64_t s = seed;
  for (uint64_t& word : state_) {
    word = SplitMix64(s);
    s += 0x9E3779B97F4A7C15ULL;
  }
}

uint64_t RandomSource::UniformInt(uint64_t bound) {
  // Lemire's multiply-and-reject; exact for every bound.
  unsigned __int128 product = static_cast<unsigned __int128>(NextU64()) * bound;
  uint64_t low = static_cast<uint64_t>(product);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(NextU64()) * bound;
      low = static_cast<uint64_t>(product);
    }
  }
  return static_cast<uint64_t>(product >> 64);
}

double RandomSource::StandardNormal() {
  const ZigguratTables& t = Tables();
  for (;;) {
    // Top 53 bits drive the abscissa, the low 7 bits pick the layer.
    const uint64_t bits = NextU64();
    const double u = 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
    const int layer = static_cast<int>(bits & (kZigLayers - 1));
    if (std::fabs(u) < t.ratio[layer]) return u * t.x[layer];
    if (layer == 0) {
      // Marsaglia's exact tail method beyond R.
      double x, y;
      do {
        x = std::log(UniformOpen()) / kZigR;
        y = std::log(UniformOpen());
      } while (-2.0 * y < x * x);
      return u < 0 ? x - kZigR : kZigR - x;
    }
    const double x = u * t.x[layer];
    const double f0 = std::exp(-0.5 * (t.x[layer] * t.x[layer] - x * x));
    const double f1 =
        std::exp(-0.5 * (t.x[layer + 1] * t.x[layer + 1] - x * x));
    if (f1 + Uniform() * (f0 - f1) < 1.0) return x;
  }
}

double RandomSource::StandardExponential() { return -std::log(UniformOpen()); }

}  // namespace dpsample
