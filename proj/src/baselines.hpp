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

// Reference selection methods: seeded random sampling, farthest-point
// diversity, greedy facility location, and the discounted-vote heuristic
// (fast vote-k). All are deterministic given their configuration and reuse
// SelectionResult so the CLI and benchmark treat every method uniformly.

#ifndef SUBSEL_BASELINES_HPP_
#define SUBSEL_BASELINES_HPP_

#include <cstdint>

#include "embedding.hpp"
#include "selection.hpp"
#include "similarity.hpp"

namespace subsel {

// Uniform sample of min(budget, pool_size) indices without replacement.
// step_gains stay empty; the objective is filled post hoc by run_method.
SelectionResult random_select(std::uint32_t pool_size, std::uint32_t budget,
                              std::uint64_t seed);

// Greedy maximization of the facility-location coverage
// G(A) = sum_i max_{k in A} s_ik; monotone submodular, ties to lowest index.
// step_gains are the coverage gains, so their sum is G(A).
SelectionResult mfl_select(const SimilarityModel& model, std::uint32_t budget);

// Farthest-point (k-center) greedy on the normalized rows with distance
// 1 - s. Starts at row 0 (all normalized rows tie on norm, lowest index
// wins); each step adds the point farthest from the selected set.
SelectionResult diversity_select(const EmbeddingMatrix& pool,
                                 std::uint32_t budget);

// Discounted-vote selection: every node votes for its k most similar other
// nodes (ties to lowest index); candidates score
//   score(u) = sum over voters v of u of rho^-(|votes(v) ∩ A|)
// and the highest score (ties to lowest index) joins A each round.
SelectionResult fast_votek_select(const SimilarityModel& model,
                                  std::uint32_t budget, std::uint32_t votek_k,
                                  double votek_rho);

}  // namespace subsel

#endif  // SUBSEL_BASELINES_HPP_
