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

#include "subsa.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "error.hpp"

namespace subsel {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void check_subset(std::uint32_t n, std::span<const std::uint32_t> subset) {
  std::vector<char> seen(n, 0);
  for (std::uint32_t idx : subset) {
    if (idx >= n) {
      throw Error(ErrorKind::kContract,
                  "subset index " + std::to_string(idx) +
                      " out of range for pool of " + std::to_string(n));
    }
    if (seen[idx]) {
      throw Error(ErrorKind::kContract,
                  "duplicate subset index " + std::to_string(idx));
    }
    seen[idx] = 1;
  }
}

// Unchecked F(subset); shared by the public objective, the naive greedy and
// the exhaustive enumerator, all of which need it in a hot loop.
double objective_unchecked(const SimilarityModel& model,
                           std::span<const std::uint32_t> subset,
                           const ObjectiveParams& params,
                           std::vector<float>& scratch) {
  double repres = 0.0;
  for (std::uint32_t k : subset) repres += model.colsum()[k];
  double diverse = 0.0;
  for (std::uint32_t m : subset) {
    const auto row = model.row(m, scratch);
    for (std::uint32_t n : subset) diverse += row[n];
  }
  return params.lambda1 * repres + params.lambda2 * diverse;
}

std::string non_default_warning(const ObjectiveParams& params) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "weights lambda1=%g lambda2=%g: monotonicity, submodularity "
                "and the (1-1/e) bound are only guaranteed at (2, -1)",
                params.lambda1, params.lambda2);
  return buf;
}

// C(n, k), capped: returns > guard as soon as the product exceeds it.
double combination_count(std::uint32_t n, std::uint32_t k, double guard) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (c > guard * 2.0) return c;
  }
  return c;
}

}  // namespace

void SelectionState::add(const SimilarityModel& model, std::uint32_t idx,
                         double gain) {
  selected.push_back(idx);
  step_gains.push_back(gain);
  objective += gain;
  in_set[idx] = 1;
  const auto row = model.row(idx, scratch_);
  for (std::uint32_t b = 0; b < selsum.size(); ++b) {
    selsum[b] += row[b];
  }
}

double objective(const SimilarityModel& model,
                 std::span<const std::uint32_t> subset,
                 const ObjectiveParams& params) {
  check_subset(model.size(), subset);
  std::vector<float> scratch;
  return objective_unchecked(model, subset, params, scratch);
}

double marginal_gain(const SimilarityModel& model, const SelectionState& state,
                     std::uint32_t candidate, const ObjectiveParams& params) {
  if (state.selsum.size() != model.size()) {
    throw Error(ErrorKind::kContract,
                "selection state does not match the model's pool size");
  }
  if (candidate >= model.size()) {
    throw Error(ErrorKind::kContract, "candidate index out of range");
  }
  if (state.in_set[candidate]) {
    throw Error(ErrorKind::kContract,
                "candidate " + std::to_string(candidate) +
                    " is already selected");
  }
  return params.lambda1 * model.colsum()[candidate] +
         params.lambda2 * (2.0 * state.selsum[candidate] + 1.0);
}

double marginal_gain(const SimilarityModel& model,
                     std::span<const std::uint32_t> subset,
                     std::uint32_t candidate, const ObjectiveParams& params) {
  check_subset(model.size(), subset);
  if (candidate >= model.size()) {
    throw Error(ErrorKind::kContract, "candidate index out of range");
  }
  double selsum = 0.0;
  for (std::uint32_t m : subset) {
    if (m == candidate) {
      throw Error(ErrorKind::kContract,
                  "candidate " + std::to_string(candidate) +
                      " is already selected");
    }
    selsum += model.similarity(m, candidate);
  }
  return params.lambda1 * model.colsum()[candidate] +
         params.lambda2 * (2.0 * selsum + 1.0);
}

SelectionResult greedy_select(const SimilarityModel& model,
                              std::uint32_t budget,
                              const ObjectiveParams& params) {
  if (budget < 1) {
    throw Error(ErrorKind::kContract, "budget must be >= 1");
  }
  const std::uint32_t n = model.size();
  const std::uint32_t steps = std::min(budget, n);
  const auto& colsum = model.colsum();

  const auto start = Clock::now();
  SelectionState state(n);
  for (std::uint32_t step = 0; step < steps; ++step) {
    double best_gain = -std::numeric_limits<double>::infinity();
    std::uint32_t best = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (state.in_set[a]) continue;
      const double gain = params.lambda1 * colsum[a] +
                          params.lambda2 * (2.0 * state.selsum[a] + 1.0);
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    state.add(model, best, best_gain);
  }

  SelectionResult result;
  result.method = method_name(Method::kSubsa);
  result.pool_size = n;
  result.budget = budget;
  result.indices = std::move(state.selected);
  result.step_gains = std::move(state.step_gains);
  result.objective_value = state.objective;
  result.wall_time_ms = elapsed_ms(start);
  result.params = params;
  if (!params.is_default()) result.warning = non_default_warning(params);
  return result;
}

SelectionResult greedy_select_naive(const SimilarityModel& model,
                                    std::uint32_t budget,
                                    const ObjectiveParams& params) {
  if (budget < 1) {
    throw Error(ErrorKind::kContract, "budget must be >= 1");
  }
  const std::uint32_t n = model.size();
  const std::uint32_t steps = std::min(budget, n);

  const auto start = Clock::now();
  std::vector<std::uint32_t> selected;
  std::vector<double> gains;
  std::vector<char> in_set(n, 0);
  std::vector<float> scratch;
  std::vector<std::uint32_t> trial;
  double current = 0.0;
  for (std::uint32_t step = 0; step < steps; ++step) {
    double best_value = -std::numeric_limits<double>::infinity();
    std::uint32_t best = 0;
    trial = selected;
    trial.push_back(0);
    for (std::uint32_t a = 0; a < n; ++a) {
      if (in_set[a]) continue;
      trial.back() = a;
      const double value = objective_unchecked(model, trial, params, scratch);
      if (value > best_value) {
        best_value = value;
        best = a;
      }
    }
    selected.push_back(best);
    in_set[best] = 1;
    gains.push_back(best_value - current);
    current = best_value;
  }

  SelectionResult result;
  result.method = method_name(Method::kSubsaNaive);
  result.pool_size = n;
  result.budget = budget;
  result.indices = std::move(selected);
  result.step_gains = std::move(gains);
  result.objective_value = current;
  result.wall_time_ms = elapsed_ms(start);
  result.params = params;
  if (!params.is_default()) result.warning = non_default_warning(params);
  return result;
}

std::pair<std::vector<std::uint32_t>, double> brute_force_optimum(
    const SimilarityModel& model, std::uint32_t budget,
    const ObjectiveParams& params, double guard) {
  if (budget < 1) {
    throw Error(ErrorKind::kContract, "budget must be >= 1");
  }
  const std::uint32_t n = model.size();
  const std::uint32_t k = std::min(budget, n);
  const double count = combination_count(n, budget, guard);
  if (count > guard) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "C(%u,%u) = %.6g subsets exceeds enumeration guard %.3g", n,
                  budget, count, guard);
    throw Error(ErrorKind::kRefused, buf);
  }

  std::vector<std::uint32_t> comb(k);
  for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
  std::vector<std::uint32_t> best_set;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<float> scratch;
  while (true) {
    const double value = objective_unchecked(model, comb, params, scratch);
    if (value > best_value) {  // strict: keeps the lexicographically smallest
      best_value = value;
      best_set = comb;
    }
    // advance to next combination in lexicographic order
    std::int64_t pos = static_cast<std::int64_t>(k) - 1;
    while (pos >= 0 && comb[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (std::uint32_t j = static_cast<std::uint32_t>(pos) + 1; j < k; ++j) {
      comb[j] = comb[j - 1] + 1;
    }
  }
  return {std::move(best_set), best_value};
}

}  // namespace subsel
