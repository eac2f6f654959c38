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

#ifndef SUBSEL_SELECTION_HPP_
#define SUBSEL_SELECTION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "similarity.hpp"

namespace subsel {

enum class Method {
  kSubsa,
  kRandom,
  kDiversity,
  kMfl,
  kFastVotek,
  // Reference implementation that recomputes the full objective for every
  // candidate at every step. Exists so the benchmark harness can measure the
  // speedup of the cached-gain path; same results, no caching.
  kSubsaNaive,
};

Method parse_method(const std::string& name);
const char* method_name(Method method);

struct ObjectiveParams {
  double lambda1 = 2.0;  // weight on the representative (reward) term
  double lambda2 = -1.0; // weight on the diverse (penalty) term

  bool is_default() const { return lambda1 == 2.0 && lambda2 == -1.0; }
};

struct SelectConfig {
  Method method = Method::kSubsa;
  std::uint32_t budget = 1;
  ObjectiveParams params;
  std::uint64_t seed = 42;        // random method only
  std::uint32_t votek_k = 150;    // fast-votek neighbor count
  double votek_rho = 10.0;        // fast-votek discount base
};

// Uniform output of every selection method. step_gains carry the method's
// own per-step score (objective gain for subsa/mfl, farthest distance for
// diversity, vote score for fast-votek, empty for random); objective_value
// is always the reward/penalty objective of the final set under `params`,
// so methods are comparable.
struct SelectionResult {
  std::string method;
  std::uint32_t pool_size = 0;
  std::uint32_t budget = 0;
  std::vector<std::uint32_t> indices;
  std::vector<double> step_gains;
  double objective_value = 0.0;
  double wall_time_ms = 0.0;  // selection stage only
  double build_ms = -1.0;     // similarity-model build; -1 = not measured
  double io_ms = -1.0;        // embedding file load; -1 = not measured
  std::string environment;
  std::string warning;
  ObjectiveParams params;
  std::uint64_t seed = 42;
  std::uint32_t votek_k = 150;
  double votek_rho = 10.0;
};

// Dispatches to the configured method and fills objective_value (computed
// post hoc for methods that do not optimize it directly) plus the config
// echo. The similarity model must belong to `pool`.
SelectionResult run_method(const EmbeddingMatrix& pool,
                           const SimilarityModel& model,
                           const SelectConfig& config);

}  // namespace subsel

#endif  // SUBSEL_SELECTION_HPP_
