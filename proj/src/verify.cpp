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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "rng.hpp"
#include "similarity.hpp"
#include "subsa.hpp"

namespace subsel {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSlack = 1e-9;       // float noise allowance on inequalities
constexpr double kGainRelTol = 1e-5;  // cached vs direct gain agreement

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string describe(std::uint64_t trial, std::uint64_t seed, std::uint32_t n,
                     std::uint32_t d, const char* detail) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "trial %llu (seed %llu, n=%u, d=%u): %s",
                static_cast<unsigned long long>(trial),
                static_cast<unsigned long long>(seed), n, d, detail);
  return buf;
}

// Random pool with occasional duplicated rows so ties get exercised. In
// faulty mode the similarity entries are raw signed cosines, deliberately
// outside the kernel's [0,1] contract.
SimilarityModel make_instance(Rng& rng, std::uint32_t n, std::uint32_t d,
                              bool faulty) {
  std::vector<float> data(static_cast<std::size_t>(n) * d);
  for (std::uint32_t i = 0; i < n; ++i) {
    float* row = data.data() + static_cast<std::size_t>(i) * d;
    if (i > 0 && uniform01(rng) < 0.15) {
      const std::uint32_t src = static_cast<std::uint32_t>(bounded(rng, i));
      const float* from = data.data() + static_cast<std::size_t>(src) * d;
      for (std::uint32_t j = 0; j < d; ++j) row[j] = from[j];
      continue;
    }
    double norm_sq = 0.0;
    for (std::uint32_t j = 0; j < d; ++j) {
      row[j] = static_cast<float>(normal(rng));
      norm_sq += static_cast<double>(row[j]) * row[j];
    }
    if (norm_sq <= 0.0) row[0] = 1.0f;
  }

  if (!faulty) {
    return SimilarityModel::build(EmbeddingMatrix(n, d, std::move(data)));
  }

  std::vector<double> norms(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const float* row = data.data() + static_cast<std::size_t>(i) * d;
    double s = 0.0;
    for (std::uint32_t j = 0; j < d; ++j) s += static_cast<double>(row[j]) * row[j];
    norms[i] = std::sqrt(s);
  }
  std::vector<float> dense(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const float* ra = data.data() + static_cast<std::size_t>(a) * d;
    for (std::uint32_t b = 0; b < n; ++b) {
      const float* rb = data.data() + static_cast<std::size_t>(b) * d;
      double dot = 0.0;
      for (std::uint32_t j = 0; j < d; ++j) {
        dot += static_cast<double>(ra[j]) * rb[j];
      }
      dense[static_cast<std::size_t>(a) * n + b] =
          static_cast<float>(dot / (norms[a] * norms[b]));
    }
  }
  return SimilarityModel::from_dense(std::move(dense), n);
}

std::vector<std::uint32_t> complement_of(std::span<const std::uint32_t> set,
                                         std::uint32_t n) {
  std::vector<char> used(n, 0);
  for (std::uint32_t v : set) used[v] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

bool gains_agree(double cached, double direct) {
  const double scale = std::max({1.0, std::fabs(cached), std::fabs(direct)});
  return std::fabs(cached - direct) <= kGainRelTol * scale;
}

void record_failure(SuiteResult& suite, const std::string& what) {
  ++suite.failures;
  if (suite.first_failure.empty()) suite.first_failure = what;
}

}  // namespace

VerifyReport run_verify_suites(const VerifyOptions& raw_options) {
  VerifyOptions options = raw_options;
  options.max_pool = std::max(2u, options.max_pool);
  options.max_dim = std::max(1u, options.max_dim);
  options.bound_max_pool = std::max(2u, options.bound_max_pool);
  options.bound_max_budget = std::max(1u, options.bound_max_budget);

  VerifyReport report;
  report.monotonicity.name = "monotonicity";
  report.submodularity.name = "submodularity";
  report.incremental.name = "incremental";
  report.bound.name = "greedy-bound";
  const ObjectiveParams params;  // guarantees are scoped to (2, -1)

  // Monotonicity: random pool, random subset A, candidate outside A.
  {
    const auto start = Clock::now();
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      const std::uint64_t instance_seed = options.seed + t;
      Rng rng(instance_seed);
      const std::uint32_t n =
          2 + static_cast<std::uint32_t>(bounded(rng, options.max_pool - 1));
      const std::uint32_t d =
          1 + static_cast<std::uint32_t>(bounded(rng, options.max_dim));
      const auto model = make_instance(rng, n, d, options.faulty_kernel);

      const std::uint32_t a_size = static_cast<std::uint32_t>(bounded(rng, n));
      const auto subset = sample_without_replacement(rng, n, a_size);
      const auto rest = complement_of(subset, n);
      const std::uint32_t alpha = rest[bounded(rng, rest.size())];

      const double cached = marginal_gain(model, subset, alpha, params);
      ++report.monotonicity.checks;
      if (!(cached >= -kSlack)) {
        char detail[96];
        std::snprintf(detail, sizeof(detail), "gain %.9g < 0 at |A|=%u",
                      cached, a_size);
        record_failure(report.monotonicity,
                       describe(t, instance_seed, n, d, detail));
      }

      auto with_alpha = subset;
      with_alpha.push_back(alpha);
      const double direct = objective(model, with_alpha, params) -
                            objective(model, subset, params);
      ++report.incremental.checks;
      if (!gains_agree(cached, direct)) {
        char detail[96];
        std::snprintf(detail, sizeof(detail),
                      "cached gain %.9g vs direct %.9g", cached, direct);
        record_failure(report.incremental,
                       describe(t, instance_seed, n, d, detail));
      }
    }
    report.monotonicity.elapsed_ms = elapsed_ms(start);
  }

  // Submodularity: nested A within B, candidate outside B; the gain at the
  // smaller set must dominate.
  {
    const auto start = Clock::now();
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      const std::uint64_t instance_seed = options.seed + 0x9e3779b9ull + t;
      Rng rng(instance_seed);
      const std::uint32_t n =
          2 + static_cast<std::uint32_t>(bounded(rng, options.max_pool - 1));
      const std::uint32_t d =
          1 + static_cast<std::uint32_t>(bounded(rng, options.max_dim));
      const auto model = make_instance(rng, n, d, options.faulty_kernel);

      const std::uint32_t b_size =
          1 + static_cast<std::uint32_t>(bounded(rng, n - 1));
      const auto big = sample_without_replacement(rng, n, b_size);
      const std::uint32_t a_size =
          static_cast<std::uint32_t>(bounded(rng, b_size + 1));
      const std::vector<std::uint32_t> small(big.begin(),
                                             big.begin() + a_size);
      const auto rest = complement_of(big, n);
      const std::uint32_t alpha = rest[bounded(rng, rest.size())];

      const double gain_small = marginal_gain(model, small, alpha, params);
      const double gain_big = marginal_gain(model, big, alpha, params);
      ++report.submodularity.checks;
      if (!(gain_small >= gain_big - kSlack)) {
        char detail[128];
        std::snprintf(detail, sizeof(detail),
                      "gain at |A|=%u is %.9g, below gain %.9g at |B|=%u",
                      a_size, gain_small, gain_big, b_size);
        record_failure(report.submodularity,
                       describe(t, instance_seed, n, d, detail));
      }

      auto with_alpha = big;
      with_alpha.push_back(alpha);
      const double direct = objective(model, with_alpha, params) -
                            objective(model, big, params);
      ++report.incremental.checks;
      if (!gains_agree(gain_big, direct)) {
        char detail[96];
        std::snprintf(detail, sizeof(detail),
                      "cached gain %.9g vs direct %.9g", gain_big, direct);
        record_failure(report.incremental,
                       describe(t, instance_seed, n, d, detail));
      }
    }
    report.submodularity.elapsed_ms = elapsed_ms(start);
  }

  // Greedy bound: exhaustive optimum on small instances, plus the greedy
  // gain trajectory against step-by-step objective differences.
  {
    const auto start = Clock::now();
    const double ratio = 1.0 - 1.0 / std::exp(1.0);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      const std::uint64_t instance_seed = options.seed + 0x517cc1b7ull + t;
      Rng rng(instance_seed);
      const std::uint32_t n =
          2 + static_cast<std::uint32_t>(
                  bounded(rng, options.bound_max_pool - 1));
      const std::uint32_t d =
          1 + static_cast<std::uint32_t>(bounded(rng, 8));
      const auto model = make_instance(rng, n, d, options.faulty_kernel);
      const std::uint32_t budget =
          1 + static_cast<std::uint32_t>(
                  bounded(rng, std::min(options.bound_max_budget, n)));

      const auto greedy = greedy_select(model, budget, params);
      const auto [opt_set, opt_value] =
          brute_force_optimum(model, budget, params);
      ++report.bound.checks;
      if (!(greedy.objective_value >= ratio * opt_value - kSlack)) {
        char detail[128];
        std::snprintf(detail, sizeof(detail),
                      "T=%u greedy %.9g < (1-1/e) * optimum %.9g", budget,
                      greedy.objective_value, opt_value);
        record_failure(report.bound, describe(t, instance_seed, n, d, detail));
      }

      double previous = 0.0;
      for (std::size_t step = 0; step < greedy.indices.size(); ++step) {
        const std::span<const std::uint32_t> prefix(greedy.indices.data(),
                                                    step + 1);
        const double value = objective(model, prefix, params);
        ++report.incremental.checks;
        if (!gains_agree(greedy.step_gains[step], value - previous)) {
          char detail[128];
          std::snprintf(detail, sizeof(detail),
                        "step %zu gain %.9g vs direct %.9g", step,
                        greedy.step_gains[step], value - previous);
          record_failure(report.incremental,
                         describe(t, instance_seed, n, d, detail));
        }
        previous = value;
      }
    }
    report.bound.elapsed_ms = elapsed_ms(start);
  }

  return report;
}

}  // namespace subsel
