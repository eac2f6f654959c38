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

#include "selection.hpp"

#include "baselines.hpp"
#include "error.hpp"
#include "subsa.hpp"

namespace subsel {

Method parse_method(const std::string& name) {
  if (name == "subsa") return Method::kSubsa;
  if (name == "random") return Method::kRandom;
  if (name == "diversity") return Method::kDiversity;
  if (name == "mfl") return Method::kMfl;
  if (name == "fast-votek") return Method::kFastVotek;
  if (name == "subsa-naive") return Method::kSubsaNaive;
  throw Error(ErrorKind::kContract,
              "unknown method '" + name +
                  "' (expect subsa, random, diversity, mfl, fast-votek, or "
                  "subsa-naive)");
}

const char* method_name(Method method) {
  switch (method) {
    case Method::kSubsa:
      return "subsa";
    case Method::kRandom:
      return "random";
    case Method::kDiversity:
      return "diversity";
    case Method::kMfl:
      return "mfl";
    case Method::kFastVotek:
      return "fast-votek";
    case Method::kSubsaNaive:
      return "subsa-naive";
  }
  return "unknown";
}

SelectionResult run_method(const EmbeddingMatrix& pool,
                           const SimilarityModel& model,
                           const SelectConfig& config) {
  if (model.size() != pool.rows()) {
    throw Error(ErrorKind::kContract,
                "similarity model does not match the pool");
  }
  SelectionResult result;
  bool needs_posthoc_objective = false;
  switch (config.method) {
    case Method::kSubsa:
      result = greedy_select(model, config.budget, config.params);
      break;
    case Method::kSubsaNaive:
      result = greedy_select_naive(model, config.budget, config.params);
      break;
    case Method::kRandom:
      result = random_select(pool.rows(), config.budget, config.seed);
      needs_posthoc_objective = true;
      break;
    case Method::kDiversity:
      result = diversity_select(pool, config.budget);
      needs_posthoc_objective = true;
      break;
    case Method::kMfl:
      result = mfl_select(model, config.budget);
      needs_posthoc_objective = true;
      break;
    case Method::kFastVotek:
      result = fast_votek_select(model, config.budget, config.votek_k,
                                 config.votek_rho);
      needs_posthoc_objective = true;
      break;
  }
  if (needs_posthoc_objective) {
    result.objective_value = objective(model, result.indices, config.params);
  }
  result.params = config.params;
  result.seed = config.seed;
  result.votek_k = config.votek_k;
  result.votek_rho = config.votek_rho;
  return result;
}

}  // namespace subsel
