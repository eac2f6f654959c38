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

#include "baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "rng.hpp"

namespace subsel {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void check_budget(std::uint32_t budget) {
  if (budget < 1) throw Error(ErrorKind::kContract, "budget must be >= 1");
}

}  // namespace

SelectionResult random_select(std::uint32_t pool_size, std::uint32_t budget,
                              std::uint64_t seed) {
  check_budget(budget);
  const std::uint32_t steps = std::min(budget, pool_size);

  const auto start = Clock::now();
  Rng rng(seed);
  auto indices = sample_without_replacement(rng, pool_size, steps);

  SelectionResult result;
  result.method = method_name(Method::kRandom);
  result.pool_size = pool_size;
  result.budget = budget;
  result.indices = std::move(indices);
  result.wall_time_ms = elapsed_ms(start);
  result.seed = seed;
  return result;
}

SelectionResult mfl_select(const SimilarityModel& model,
                           std::uint32_t budget) {
  check_budget(budget);
  const std::uint32_t n = model.size();
  const std::uint32_t steps = std::min(budget, n);

  const auto start = Clock::now();
  std::vector<double> best(n, 0.0);  // coverage max_{k in A} s_ik, G({}) = 0
  std::vector<char> in_set(n, 0);
  std::vector<std::uint32_t> selected;
  std::vector<double> gains;
  std::vector<float> scratch;
  for (std::uint32_t step = 0; step < steps; ++step) {
    double best_gain = -std::numeric_limits<double>::infinity();
    std::uint32_t pick = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (in_set[a]) continue;
      const auto row = model.row(a, scratch);
      double gain = 0.0;
      for (std::uint32_t i = 0; i < n; ++i) {
        const double s = row[i];
        if (s > best[i]) gain += s - best[i];
      }
      if (gain > best_gain) {
        best_gain = gain;
        pick = a;
      }
    }
    selected.push_back(pick);
    gains.push_back(best_gain);
    in_set[pick] = 1;
    const auto row = model.row(pick, scratch);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (row[i] > best[i]) best[i] = row[i];
    }
  }

  SelectionResult result;
  result.method = method_name(Method::kMfl);
  result.pool_size = n;
  result.budget = budget;
  result.indices = std::move(selected);
  result.step_gains = std::move(gains);
  result.wall_time_ms = elapsed_ms(start);
  return result;
}

SelectionResult diversity_select(const EmbeddingMatrix& pool,
                                 std::uint32_t budget) {
  check_budget(budget);
  const std::uint32_t n = pool.rows();
  const std::uint32_t dim = pool.dim();
  const std::uint32_t steps = std::min(budget, n);

  const auto start = Clock::now();
  std::vector<float> normalized(static_cast<std::size_t>(n) * dim);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto src = pool.row(i);
    double norm_sq = 0.0;
    for (float v : src) norm_sq += static_cast<double>(v) * v;
    const double inv = 1.0 / std::sqrt(norm_sq);
    float* dst = normalized.data() + static_cast<std::size_t>(i) * dim;
    for (std::uint32_t j = 0; j < dim; ++j) {
      dst[j] = static_cast<float>(src[j] * inv);
    }
  }
  const auto sim = [&normalized, dim](std::uint32_t a, std::uint32_t b) {
    const float* pa = normalized.data() + static_cast<std::size_t>(a) * dim;
    const float* pb = normalized.data() + static_cast<std::size_t>(b) * dim;
    double dot = 0.0;
    for (std::uint32_t j = 0; j < dim; ++j) {
      dot += static_cast<double>(pa[j]) * static_cast<double>(pb[j]);
    }
    return std::clamp(dot, 0.0, 1.0);
  };

  std::vector<std::uint32_t> selected{0};
  std::vector<double> gains{1.0};  // distance of the start to the empty set
  std::vector<char> in_set(n, 0);
  in_set[0] = 1;
  std::vector<double> min_dist(n);
  for (std::uint32_t i = 0; i < n; ++i) min_dist[i] = 1.0 - sim(0, i);
  for (std::uint32_t step = 1; step < steps; ++step) {
    double best_dist = -std::numeric_limits<double>::infinity();
    std::uint32_t pick = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (in_set[a]) continue;
      if (min_dist[a] > best_dist) {
        best_dist = min_dist[a];
        pick = a;
      }
    }
    selected.push_back(pick);
    gains.push_back(best_dist);
    in_set[pick] = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      const double d = 1.0 - sim(pick, i);
      if (d < min_dist[i]) min_dist[i] = d;
    }
  }

  SelectionResult result;
  result.method = method_name(Method::kDiversity);
  result.pool_size = n;
  result.budget = budget;
  result.indices = std::move(selected);
  result.step_gains = std::move(gains);
  result.wall_time_ms = elapsed_ms(start);
  return result;
}

SelectionResult fast_votek_select(const SimilarityModel& model,
                                  std::uint32_t budget, std::uint32_t votek_k,
                                  double votek_rho) {
  check_budget(budget);
  const std::uint32_t n = model.size();
  if (votek_k < 1 || votek_k >= n) {
    throw Error(ErrorKind::kContract,
                "votek_k (" + std::to_string(votek_k) +
                    ") must be in [1, pool size " + std::to_string(n) + ")");
  }
  if (!(votek_rho > 1.0)) {
    throw Error(ErrorKind::kContract, "votek_rho must be > 1");
  }
  const std::uint32_t steps = std::min(budget, n);

  const auto start = Clock::now();
  // Vote graph: votes[v] holds v's votek_k most similar other nodes,
  // similarity descending with ties to the lowest index.
  std::vector<std::vector<std::uint32_t>> in_votes(n);
  std::vector<std::vector<std::uint32_t>> votes(n);
  {
    std::vector<float> scratch;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      const auto row = model.row(v, scratch);
      order.clear();
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i != v) order.push_back(i);
      }
      std::partial_sort(order.begin(), order.begin() + votek_k, order.end(),
                        [&row](std::uint32_t a, std::uint32_t b) {
                          if (row[a] != row[b]) return row[a] > row[b];
                          return a < b;
                        });
      order.resize(votek_k);
      votes[v] = order;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      for (std::uint32_t u : votes[v]) in_votes[u].push_back(v);
    }
  }

  // discount[j] = rho^-j for j overlapping selected vote targets
  std::vector<double> discount(votek_k + 1);
  discount[0] = 1.0;
  const double inv_rho = 1.0 / votek_rho;
  for (std::uint32_t j = 1; j <= votek_k; ++j) {
    discount[j] = discount[j - 1] * inv_rho;
  }

  std::vector<std::uint32_t> overlap(n, 0);  // |votes(v) ∩ A|
  std::vector<char> in_set(n, 0);
  std::vector<std::uint32_t> selected;
  std::vector<double> gains;
  for (std::uint32_t step = 0; step < steps; ++step) {
    double best_score = -std::numeric_limits<double>::infinity();
    std::uint32_t pick = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (in_set[u]) continue;
      double score = 0.0;
      for (std::uint32_t v : in_votes[u]) score += discount[overlap[v]];
      if (score > best_score) {
        best_score = score;
        pick = u;
      }
    }
    selected.push_back(pick);
    gains.push_back(best_score);
    in_set[pick] = 1;
    for (std::uint32_t v : in_votes[pick]) ++overlap[v];
  }

  SelectionResult result;
  result.method = method_name(Method::kFastVotek);
  result.pool_size = n;
  result.budget = budget;
  result.indices = std::move(selected);
  result.step_gains = std::move(gains);
  result.wall_time_ms = elapsed_ms(start);
  result.votek_k = votek_k;
  result.votek_rho = votek_rho;
  return result;
}

}  // namespace subsel
