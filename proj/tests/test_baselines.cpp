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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "baselines.hpp"
#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "selection.hpp"
#include "subsa.hpp"

using namespace subsel;

namespace {

bool distinct_in_range(const std::vector<std::uint32_t>& indices,
                       std::uint32_t n) {
  std::set<std::uint32_t> seen(indices.begin(), indices.end());
  if (seen.size() != indices.size()) return false;
  return indices.empty() || *seen.rbegin() < n;
}

}  // namespace

TEST_CASE("random selection basics") {
  SUBCASE("budget >= pool yields the whole pool for any seed") {
    for (std::uint64_t seed : {1ull, 42ull, 999ull}) {
      const auto result = random_select(5, 5, seed);
      std::set<std::uint32_t> as_set(result.indices.begin(),
                                     result.indices.end());
      CHECK(as_set == std::set<std::uint32_t>{0, 1, 2, 3, 4});
    }
  }
  SUBCASE("seeded determinism at the 3K scale") {
    const auto a = random_select(3000, 18, 42);
    const auto b = random_select(3000, 18, 42);
    CHECK(a.indices == b.indices);
    CHECK(a.indices.size() == 18);
    CHECK(distinct_in_range(a.indices, 3000));
    CHECK(a.step_gains.empty());
  }
  SUBCASE("different seeds differ") {
    CHECK(random_select(3000, 18, 1).indices !=
          random_select(3000, 18, 2).indices);
  }
}

TEST_CASE("facility location hand values") {
  const auto twins = SimilarityModel::build(
      oracle::make_pool({{2.0f, 1.0f}, {2.0f, 1.0f}}));
  const auto two = mfl_select(twins, 1);
  CHECK(two.indices == std::vector<std::uint32_t>{0});
  CHECK(two.step_gains[0] == 2.0);  // covers both rows fully

  const auto trio = SimilarityModel::build(
      oracle::make_pool({{1.0f, 0.0f}, {1.0f, 0.0f}, {0.0f, 1.0f}}));
  const auto result = mfl_select(trio, 2);
  // first pick 0 (G=2), then 2 (G=3 beats 2 for candidate 1)
  CHECK(result.indices == std::vector<std::uint32_t>{0, 2});
  CHECK(result.step_gains[0] == 2.0);
  CHECK(result.step_gains[1] == 1.0);
}

TEST_CASE("facility location gains never increase") {
  Rng rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(bounded(rng, 60));
    const auto pool = oracle::random_pool(rng, n, 6);
    const auto model = SimilarityModel::build(pool);
    const auto result = mfl_select(model, std::min(n, 12u));
    for (std::size_t i = 1; i < result.step_gains.size(); ++i) {
      CHECK(result.step_gains[i] <= result.step_gains[i - 1] + 1e-9);
    }
  }
}

TEST_CASE("facility location greedy meets the (1 - 1/e) bound") {
  Rng rng(9);
  const double ratio = 1.0 - 1.0 / std::exp(1.0);
  for (int trial = 0; trial < 15; ++trial) {
    const auto pool = oracle::random_pool(rng, 12, 4);
    const auto model = SimilarityModel::build(pool);
    const auto result = mfl_select(model, 3);
    const double greedy_value =
        oracle::facility_location(pool, result.indices);
    const auto [opt_set, opt_value] =
        oracle::enumerate_facility_optimum(pool, 3);
    CHECK(greedy_value >= ratio * opt_value - 1e-6);
    // the recorded gain sequence sums to G(A)
    double gain_sum = 0.0;
    for (double g : result.step_gains) gain_sum += g;
    CHECK(gain_sum == doctest::Approx(greedy_value).epsilon(1e-5));
  }
}

TEST_CASE("diversity selection hand values") {
  const auto pair = oracle::make_pool({{1.0f, 0.0f}, {0.0f, 1.0f}});
  CHECK(diversity_select(pair, 2).indices ==
        std::vector<std::uint32_t>{0, 1});

  const auto trio =
      oracle::make_pool({{1.0f, 0.0f}, {1.0f, 0.0f}, {0.0f, 1.0f}});
  // index 1 sits at distance 0 from the start, index 2 at distance 1
  CHECK(diversity_select(trio, 2).indices ==
        std::vector<std::uint32_t>{0, 2});
  CHECK(diversity_select(trio, 1).indices == std::vector<std::uint32_t>{0});
}

TEST_CASE("diversity keeps pairwise distances strictly positive") {
  Rng rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    const std::uint32_t n = 6 + static_cast<std::uint32_t>(bounded(rng, 40));
    const std::uint32_t t = 2 + static_cast<std::uint32_t>(bounded(rng, 4));
    const auto pool = oracle::random_pool(rng, n, 8);  // rows distinct a.s.
    const auto result = diversity_select(pool, t);
    REQUIRE(result.indices.size() == t);
    double min_dist = 1.0;
    for (std::size_t a = 0; a < result.indices.size(); ++a) {
      for (std::size_t b = a + 1; b < result.indices.size(); ++b) {
        const double s = oracle::kernel(pool.row(result.indices[a]),
                                        pool.row(result.indices[b]));
        min_dist = std::min(min_dist, 1.0 - s);
      }
    }
    CHECK(min_dist > 0.0);
  }
}

TEST_CASE("fast vote-k hand values on {e1, e1, e2}") {
  const auto pool =
      oracle::make_pool({{1.0f, 0.0f}, {1.0f, 0.0f}, {0.0f, 1.0f}});
  const auto model = SimilarityModel::build(pool);
  // votes: 0 -> {1}, 1 -> {0}, 2 -> {0} (zero tie broken to the lowest)
  const auto first = fast_votek_select(model, 1, 1, 10.0);
  CHECK(first.indices == std::vector<std::uint32_t>{0});
  CHECK(first.step_gains[0] == 2.0);  // two undiscounted voters

  const auto two = fast_votek_select(model, 2, 1, 10.0);
  CHECK(two.indices == std::vector<std::uint32_t>{0, 1});

  const auto all = fast_votek_select(model, 3, 1, 10.0);
  CHECK(distinct_in_range(all.indices, 3));
  CHECK(all.indices.size() == 3);
}

TEST_CASE("fast vote-k contract checks") {
  Rng rng(19);
  const auto pool = oracle::random_pool(rng, 6, 4);
  const auto model = SimilarityModel::build(pool);
  CHECK_THROWS_AS(fast_votek_select(model, 2, 6, 10.0), Error);   // k >= N
  CHECK_THROWS_AS(fast_votek_select(model, 2, 0, 10.0), Error);   // k < 1
  CHECK_THROWS_AS(fast_votek_select(model, 2, 3, 1.0), Error);    // rho <= 1
}

TEST_CASE("fast vote-k matches the from-scratch discounted-vote oracle") {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 5 + static_cast<std::uint32_t>(bounded(rng, 35));
    const std::uint32_t d = 2 + static_cast<std::uint32_t>(bounded(rng, 8));
    const std::uint32_t k =
        1 + static_cast<std::uint32_t>(bounded(rng, std::min(n - 1, 8u)));
    const std::uint32_t t =
        1 + static_cast<std::uint32_t>(bounded(rng, std::min(n, 8u)));
    const auto pool = oracle::random_pool(rng, n, d);
    const auto model = SimilarityModel::build(pool);
    const auto result = fast_votek_select(model, t, k, 10.0);
    const auto expected = oracle::fast_votek(pool, t, k, 10.0);
    CHECK(result.indices == expected);
  }
}

TEST_CASE("every baseline returns min(T, N) distinct indices, twice") {
  Rng rng(33);
  const std::uint32_t n = 50;
  const auto pool = oracle::random_pool(rng, n, 8);
  const auto model = SimilarityModel::build(pool);
  for (std::uint32_t budget : {1u, 7u, 50u, 80u}) {
    const std::uint32_t expect = std::min(budget, n);
    for (Method method : {Method::kRandom, Method::kDiversity, Method::kMfl,
                          Method::kFastVotek, Method::kSubsa}) {
      SelectConfig config;
      config.method = method;
      config.budget = budget;
      config.votek_k = 10;
      const auto a = run_method(pool, model, config);
      const auto b = run_method(pool, model, config);
      CHECK(a.indices.size() == expect);
      CHECK(distinct_in_range(a.indices, n));
      CHECK(a.indices == b.indices);
      CHECK(a.step_gains == b.step_gains);
    }
  }
}

TEST_CASE("baselines reject budget < 1") {
  Rng rng(45);
  const auto pool = oracle::random_pool(rng, 8, 4);
  const auto model = SimilarityModel::build(pool);
  CHECK_THROWS_AS(random_select(8, 0, 42), Error);
  CHECK_THROWS_AS(mfl_select(model, 0), Error);
  CHECK_THROWS_AS(diversity_select(pool, 0), Error);
  CHECK_THROWS_AS(fast_votek_select(model, 0, 3, 10.0), Error);
}

TEST_CASE("run_method fills the objective for every method") {
  Rng rng(39);
  const auto pool = oracle::random_pool(rng, 30, 5);
  const auto model = SimilarityModel::build(pool);
  for (Method method : {Method::kRandom, Method::kDiversity, Method::kMfl,
                        Method::kFastVotek, Method::kSubsa,
                        Method::kSubsaNaive}) {
    SelectConfig config;
    config.method = method;
    config.budget = 6;
    config.votek_k = 8;
    const auto result = run_method(pool, model, config);
    const double expected = objective(model, result.indices, config.params);
    CHECK(std::fabs(result.objective_value - expected) <=
          1e-5 * std::max(1.0, std::fabs(expected)));
    CHECK(result.method == method_name(method));
    CHECK(result.pool_size == 30);
    CHECK(result.budget == 6);
  }
}
