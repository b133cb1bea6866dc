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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "dpsample/elap.h"
#include "dpsample/gaussian.h"
#include "dpsample/kary.h"
#include "dpsample/random.h"
#include "dpsample/types.h"

namespace dpsample {
namespace {

KaryDataset MakeKary(int64_t n, int k) {
  RandomSource rng(1);
  std::vector<Element> values(n);
  for (Element& v : values) v = 1 + static_cast<Element>(rng.UniformInt(k));
  return *KaryDataset::Create(std::move(values), k);
}

VectorDataset MakeVectors(int64_t n, int dim) {
  RandomSource rng(2);
  std::vector<double> flat(n * dim);
  for (double& x : flat) x = rng.StandardNormal();
  return *VectorDataset::FromFlat(std::move(flat), dim);
}

void BM_StandardNormal(benchmark::State& state) {
  RandomSource rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(rng.StandardNormal());
}
BENCHMARK(BM_StandardNormal);

void BM_RrSample(benchmark::State& state) {
  const RrParams params =
      *RrParams::Create(1.0, static_cast<int>(state.range(0)));
  RandomSource rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RrSample(1, params, rng));
  }
}
BENCHMARK(BM_RrSample)->Arg(2)->Arg(100);

void BM_SubrrSample(benchmark::State& state) {
  const KaryDataset data = MakeKary(state.range(0), 10);
  RandomSource rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SubrrSample(data, 1.0, rng));
  }
}
BENCHMARK(BM_SubrrSample)->Arg(1000)->Arg(1000000);

void BM_ShurrRun(benchmark::State& state) {
  const KaryDataset data = MakeKary(1000000, 10);
  RandomSource rng(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ShurrRun(data, 1.0, 1e-6, state.range(0), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShurrRun)->Arg(1)->Arg(1000)->Arg(500000);

void BM_ElapSample(benchmark::State& state) {
  const ElapParams params =
      *ElapParams::Create(static_cast<int>(state.range(0)), 1.0);
  RandomSource rng(7);
  std::vector<double> out(state.range(0));
  for (auto _ : state) {
    ElapSampleInto(params, rng, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ElapSample)->Arg(1)->Arg(10)->Arg(1000);

void BM_PureGaussianSample(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(1));
  const VectorDataset data = MakeVectors(state.range(0), dim);
  const PureGaussianSamplerParams params =
      *PureGaussianSamplerParams::Create(1.0, dim, 0.1, 1.0);
  RandomSource rng(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PureGaussianSample(data, params, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PureGaussianSample)
    ->Args({1000, 1})
    ->Args({100000, 1})
    ->Args({10000, 16});

}  // namespace
}  // namespace dpsample

BENCHMARK_MAIN();
