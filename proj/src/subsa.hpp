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

// The reward/penalty submodular objective
//
//     F(A) = lambda1 * sum_{i in U} sum_{k in A} s_ik
//          + lambda2 * sum_{m in A} sum_{n in A} s_mn
//
// over the non-negative cosine kernel s, its O(1) marginal gain
//
//     F(A + a) - F(A) = lambda1 * colsum[a]
//                     + lambda2 * (2 * selsum[a] + s_aa)
//
// and the greedy maximizer under a cardinality budget. At the default
// weights (2, -1) the objective is monotone non-decreasing and submodular,
// so greedy carries the classical (1 - 1/e) approximation guarantee; a
// brute-force enumerator is provided to check that bound on small instances.

#ifndef SUBSEL_SUBSA_HPP_
#define SUBSEL_SUBSA_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "selection.hpp"
#include "similarity.hpp"

namespace subsel {

// Incremental greedy state: the ordered selection A and the cached
// per-candidate sums selsum[a] = sum_{m in A} s(m, a).
struct SelectionState {
  std::vector<std::uint32_t> selected;
  std::vector<double> selsum;
  std::vector<char> in_set;
  std::vector<double> step_gains;
  double objective = 0.0;

  explicit SelectionState(std::uint32_t pool_size)
      : selsum(pool_size, 0.0), in_set(pool_size, 0) {}

  // Appends `idx` with the gain it was accepted at and refreshes selsum.
  void add(const SimilarityModel& model, std::uint32_t idx, double gain);

 private:
  std::vector<float> scratch_;
};

// F(subset) by direct summation. The diverse term runs over every ordered
// pair, diagonal included. Throws on out-of-range or duplicate indices.
double objective(const SimilarityModel& model,
                 std::span<const std::uint32_t> subset,
                 const ObjectiveParams& params);

// Closed-form gain of adding `candidate` to the state's selection, O(1)
// from the cached aggregates. Throws if the candidate is already selected.
double marginal_gain(const SimilarityModel& model, const SelectionState& state,
                     std::uint32_t candidate, const ObjectiveParams& params);

// Gain without a state, O(|subset|): for one-off queries.
double marginal_gain(const SimilarityModel& model,
                     std::span<const std::uint32_t> subset,
                     std::uint32_t candidate, const ObjectiveParams& params);

// Greedy argmax selection of min(budget, N) elements; ties go to the lowest
// candidate index. Deterministic for fixed inputs.
SelectionResult greedy_select(const SimilarityModel& model,
                              std::uint32_t budget,
                              const ObjectiveParams& params = {});

// Same selection rule, but every candidate is scored by recomputing the full
// objective from scratch. Benchmark reference only.
SelectionResult greedy_select_naive(const SimilarityModel& model,
                                    std::uint32_t budget,
                                    const ObjectiveParams& params = {});

// Exhaustive optimum over all size-min(budget,N) subsets; returns the
// lexicographically smallest maximizer and its objective value. Refuses when
// C(N, T) exceeds `guard`.
std::pair<std::vector<std::uint32_t>, double> brute_force_optimum(
    const SimilarityModel& model, std::uint32_t budget,
    const ObjectiveParams& params = {}, double guard = 1e7);

}  // namespace subsel

#endif  // SUBSEL_SUBSA_HPP_
