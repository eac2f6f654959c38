// Copyright 2026 The subsel Authors.
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

#ifndef SUBSEL_SYNTHETIC_HPP_
#define SUBSEL_SYNTHETIC_HPP_

#include <cstdint>

#include "embedding.hpp"

namespace subsel {

// Seeded Gaussian-mixture pool: `clusters` unit-Gaussian centers, rows
// assigned round-robin with isotropic noise. Fully deterministic for a
// fixed seed; stands in for real embedding files in benchmarks and tests.
EmbeddingMatrix synthetic_pool(std::uint32_t rows, std::uint32_t dim,
                               std::uint32_t clusters, std::uint64_t seed,
                               double noise = 0.25);

}  // namespace subsel

#endif  // SUBSEL_SYNTHETIC_HPP_
