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

#ifndef DPSAMPLE_PARALLEL_H_
#define DPSAMPLE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace dpsample {

// Worker count: hardware concurrency, capped by the DP_SAMPLER_THREADS
// environment variable when it holds a positive integer.
int MaxThreads();

// Runs body(i) for i in [0, count) on up to MaxThreads() threads. Work is
// split into contiguous chunks; callers write results into slots indexed by
// i so the outcome does not depend on scheduling.
void ParallelFor(int64_t count, const std::function<void(int64_t)>& body);

}  // namespace dpsample

#endif  // DPSAMPLE_PARALLEL_H_
