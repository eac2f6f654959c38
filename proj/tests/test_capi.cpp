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

// Exercises the shared-library surface only: no core headers, no core lib.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "subsel/subsel.h"

extern "C" int subsel_capi_smoke_from_c(void);

namespace fs = std::filesystem;

namespace {

std::string temp_file(const std::string& name) {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("subsel_capi_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

struct Matrix {
  subsel_matrix* ptr = nullptr;
  ~Matrix() { subsel_matrix_free(ptr); }
};

struct Model {
  subsel_model* ptr = nullptr;
  ~Model() { subsel_model_free(ptr); }
};

struct Result {
  subsel_result* ptr = nullptr;
  ~Result() { subsel_result_free(ptr); }
};

// pool {e1, e1, e2}
const float kTrio[6] = {1.0f, 0.0f, 1.0f, 0.0f, 0.0f, 1.0f};

}  // namespace

TEST_CASE("the header is consumable from plain C") {
  CHECK(subsel_capi_smoke_from_c() == 1);
}

TEST_CASE("version and error text are always present") {
  CHECK(subsel_version() != nullptr);
  CHECK(subsel_last_error() != nullptr);
}

TEST_CASE("matrix construction, accessors and validation") {
  Matrix m;
  REQUIRE(subsel_matrix_from_data(kTrio, 3, 2, &m.ptr) == SUBSEL_OK);
  CHECK(subsel_matrix_rows(m.ptr) == 3);
  CHECK(subsel_matrix_dim(m.ptr) == 2);
  REQUIRE(subsel_matrix_row(m.ptr, 2) != nullptr);
  CHECK(subsel_matrix_row(m.ptr, 2)[1] == 1.0f);
  CHECK(subsel_matrix_row(m.ptr, 3) == nullptr);
  CHECK(std::string(subsel_matrix_id(m.ptr, 1)) == "1");

  const float zero[2] = {0.0f, 0.0f};
  subsel_matrix* bad = nullptr;
  CHECK(subsel_matrix_from_data(zero, 1, 2, &bad) ==
        SUBSEL_ERROR_VALIDATION);
  CHECK(std::strstr(subsel_last_error(), "zero-norm row 0") != nullptr);

  CHECK(subsel_matrix_from_data(nullptr, 1, 2, &bad) ==
        SUBSEL_ERROR_CONTRACT);
}

TEST_CASE("matrix file round trip through the C API") {
  Matrix m;
  REQUIRE(subsel_matrix_synthetic(120, 24, 8, 5, &m.ptr) == SUBSEL_OK);
  const auto path = temp_file("pool.bin");
  REQUIRE(subsel_matrix_save(m.ptr, path.c_str(), SUBSEL_FORMAT_BINARY) ==
          SUBSEL_OK);
  Matrix loaded;
  REQUIRE(subsel_matrix_load(path.c_str(), SUBSEL_FORMAT_BINARY,
                             &loaded.ptr) == SUBSEL_OK);
  REQUIRE(subsel_matrix_rows(loaded.ptr) == 120);
  CHECK(std::memcmp(subsel_matrix_row(loaded.ptr, 0),
                    subsel_matrix_row(m.ptr, 0),
                    24 * sizeof(float)) == 0);

  subsel_matrix* missing = nullptr;
  CHECK(subsel_matrix_load("/nonexistent/x.bin", SUBSEL_FORMAT_BINARY,
                           &missing) == SUBSEL_ERROR_IO);
}

TEST_CASE("kernel, model aggregates and objective helpers") {
  const float u[2] = {3.0f, 4.0f};
  const float v[2] = {0.0f, 1.0f};
  double value = -1.0;
  REQUIRE(subsel_kernel(u, u, 2, &value) == SUBSEL_OK);
  CHECK(value == 1.0);

  Matrix m;
  REQUIRE(subsel_matrix_from_data(kTrio, 3, 2, &m.ptr) == SUBSEL_OK);
  Model model;
  REQUIRE(subsel_model_build(m.ptr, 0, &model.ptr) == SUBSEL_OK);
  CHECK(subsel_model_size(model.ptr) == 3);
  CHECK(subsel_model_has_dense(model.ptr) == 1);

  double colsum[3];
  REQUIRE(subsel_model_colsum(model.ptr, colsum, 3) == SUBSEL_OK);
  CHECK(colsum[0] == 2.0);
  CHECK(colsum[1] == 2.0);
  CHECK(colsum[2] == 1.0);
  CHECK(subsel_model_colsum(model.ptr, colsum, 2) == SUBSEL_ERROR_CONTRACT);

  REQUIRE(subsel_model_similarity(model.ptr, 0, 2, &value) == SUBSEL_OK);
  CHECK(value == 0.0);

  const uint32_t subset[1] = {0};
  REQUIRE(subsel_objective(model.ptr, subset, 1, 2.0, -1.0, &value) ==
          SUBSEL_OK);
  CHECK(value == 3.0);
  REQUIRE(subsel_marginal_gain(model.ptr, subset, 1, 2, 2.0, -1.0, &value) ==
          SUBSEL_OK);
  CHECK(value == 1.0);
  CHECK(subsel_marginal_gain(model.ptr, subset, 1, 0, 2.0, -1.0, &value) ==
        SUBSEL_ERROR_CONTRACT);
}

TEST_CASE("selection through the C API for every method") {
  Matrix m;
  REQUIRE(subsel_matrix_synthetic(80, 12, 4, 9, &m.ptr) == SUBSEL_OK);
  Model model;
  REQUIRE(subsel_model_build(m.ptr, 0, &model.ptr) == SUBSEL_OK);

  const subsel_method methods[] = {
      SUBSEL_METHOD_SUBSA,      SUBSEL_METHOD_RANDOM,
      SUBSEL_METHOD_DIVERSITY,  SUBSEL_METHOD_MFL,
      SUBSEL_METHOD_FAST_VOTEK, SUBSEL_METHOD_SUBSA_NAIVE};
  for (subsel_method method : methods) {
    subsel_select_config config;
    subsel_select_config_init(&config);
    config.method = method;
    config.budget = 10;
    config.votek_k = 15;
    Result result;
    REQUIRE(subsel_select(m.ptr, model.ptr, &config, &result.ptr) ==
            SUBSEL_OK);
    REQUIRE(subsel_result_size(result.ptr) == 10);
    std::vector<uint32_t> indices(10);
    REQUIRE(subsel_result_indices(result.ptr, indices.data(), 10) ==
            SUBSEL_OK);
    for (uint32_t idx : indices) CHECK(idx < 80);
    CHECK(subsel_result_select_ms(result.ptr) >= 0.0);
    CHECK(subsel_result_pool_size(result.ptr) == 80);
    CHECK(subsel_result_budget(result.ptr) == 10);
    if (method != SUBSEL_METHOD_RANDOM) {
      REQUIRE(subsel_result_gain_count(result.ptr) == 10);
      std::vector<double> gains(10);
      CHECK(subsel_result_step_gains(result.ptr, gains.data(), 10) ==
            SUBSEL_OK);
    } else {
      CHECK(subsel_result_gain_count(result.ptr) == 0);
    }
  }
}

TEST_CASE("subsa and naive agree; brute force bound holds") {
  Matrix m;
  REQUIRE(subsel_matrix_synthetic(12, 6, 3, 13, &m.ptr) == SUBSEL_OK);
  Model model;
  REQUIRE(subsel_model_build(m.ptr, 0, &model.ptr) == SUBSEL_OK);

  subsel_select_config config;
  subsel_select_config_init(&config);
  config.budget = 3;
  Result fast;
  REQUIRE(subsel_select(m.ptr, model.ptr, &config, &fast.ptr) == SUBSEL_OK);
  config.method = SUBSEL_METHOD_SUBSA_NAIVE;
  Result naive;
  REQUIRE(subsel_select(m.ptr, model.ptr, &config, &naive.ptr) == SUBSEL_OK);
  uint32_t a[3], b[3];
  REQUIRE(subsel_result_indices(fast.ptr, a, 3) == SUBSEL_OK);
  REQUIRE(subsel_result_indices(naive.ptr, b, 3) == SUBSEL_OK);
  CHECK(std::memcmp(a, b, sizeof(a)) == 0);

  uint32_t opt[3];
  uint32_t opt_len = 0;
  double opt_value = 0.0;
  REQUIRE(subsel_brute_force_optimum(model.ptr, 3, 2.0, -1.0, opt, &opt_len,
                                     &opt_value) == SUBSEL_OK);
  CHECK(opt_len == 3);
  CHECK(subsel_result_objective(fast.ptr) >=
        (1.0 - 1.0 / 2.718281828459045) * opt_value - 1e-9);

  // the guard refuses runaway enumerations
  Matrix big;
  REQUIRE(subsel_matrix_synthetic(40, 4, 4, 17, &big.ptr) == SUBSEL_OK);
  Model big_model;
  REQUIRE(subsel_model_build(big.ptr, 0, &big_model.ptr) == SUBSEL_OK);
  std::vector<uint32_t> sink(20);
  CHECK(subsel_brute_force_optimum(big_model.ptr, 20, 2.0, -1.0, sink.data(),
                                   &opt_len, &opt_value) ==
        SUBSEL_ERROR_REFUSED);
}

TEST_CASE("report save/load round trip with timings and environment") {
  Matrix m;
  REQUIRE(subsel_matrix_synthetic(50, 8, 4, 21, &m.ptr) == SUBSEL_OK);
  Model model;
  REQUIRE(subsel_model_build(m.ptr, 0, &model.ptr) == SUBSEL_OK);
  subsel_select_config config;
  subsel_select_config_init(&config);
  config.budget = 7;
  Result result;
  REQUIRE(subsel_select(m.ptr, model.ptr, &config, &result.ptr) == SUBSEL_OK);
  REQUIRE(subsel_result_set_timings(result.ptr, 12.5, 100.25) == SUBSEL_OK);
  REQUIRE(subsel_result_set_environment(result.ptr, "test rig") == SUBSEL_OK);

  const auto path = temp_file("report.json");
  REQUIRE(subsel_result_save(result.ptr, path.c_str()) == SUBSEL_OK);
  Result loaded;
  REQUIRE(subsel_result_load(path.c_str(), &loaded.ptr) == SUBSEL_OK);
  CHECK(subsel_result_size(loaded.ptr) == 7);
  CHECK(std::string(subsel_result_method(loaded.ptr)) == "subsa");
  CHECK(subsel_result_objective(loaded.ptr) ==
        subsel_result_objective(result.ptr));

  std::vector<uint32_t> original(7), reread(7);
  REQUIRE(subsel_result_indices(result.ptr, original.data(), 7) == SUBSEL_OK);
  REQUIRE(subsel_result_indices(loaded.ptr, reread.data(), 7) == SUBSEL_OK);
  CHECK(original == reread);
}

TEST_CASE("retrieval through the C API") {
  Matrix m;
  REQUIRE(subsel_matrix_from_data(kTrio, 3, 2, &m.ptr) == SUBSEL_OK);
  const uint32_t annotated[2] = {0, 2};
  const float query[2] = {0.0f, 1.0f};  // equals row 2
  uint32_t indices[2];
  double scores[2];
  REQUIRE(subsel_retrieve(m.ptr, query, 2, annotated, 2, 2, indices,
                          scores) == SUBSEL_OK);
  CHECK(indices[1] == 2);  // most similar last
  CHECK(scores[1] == 1.0);
  CHECK(indices[0] == 0);
  CHECK(scores[0] == 0.0);

  REQUIRE(subsel_retrieve_random(m.ptr, query, 2, annotated, 2, 2, 11,
                                 indices, scores) == SUBSEL_OK);
  CHECK(((indices[0] == 0 && indices[1] == 2) ||
         (indices[0] == 2 && indices[1] == 0)));

  CHECK(subsel_retrieve(m.ptr, query, 2, annotated, 2, 3, indices, scores) ==
        SUBSEL_ERROR_CONTRACT);
  CHECK(subsel_retrieve(m.ptr, query, 1, annotated, 2, 1, indices, scores) ==
        SUBSEL_ERROR_CONTRACT);
}

TEST_CASE("verify suites through the C API") {
  subsel_verify_stats stats;
  REQUIRE(subsel_verify_run(100, 42, 0, 0, 0, &stats) == SUBSEL_OK);
  CHECK(stats.monotonicity_checks == 100);
  CHECK(stats.monotonicity_failures == 0);
  CHECK(stats.submodularity_failures == 0);
  CHECK(stats.incremental_failures == 0);
  CHECK(stats.bound_failures == 0);

  REQUIRE(subsel_verify_run(60, 42, 0, 0, 1, &stats) == SUBSEL_OK);
  CHECK(stats.monotonicity_failures > 0);
  CHECK(std::string(subsel_last_error()).find("gain") != std::string::npos);
}
