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

// extern-C shim over the core: maps exceptions to status codes and keeps
// all C++ state behind opaque handles.

#include "subsel/subsel.h"

#include <cstring>
#include <new>
#include <string>

#include "baselines.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "report.hpp"
#include "retrieval.hpp"
#include "selection.hpp"
#include "similarity.hpp"
#include "subsa.hpp"
#include "synthetic.hpp"
#include "verify.hpp"

struct subsel_matrix {
  subsel::EmbeddingMatrix matrix;
};

struct subsel_model {
  subsel::SimilarityModel model;
};

struct subsel_result {
  subsel::SelectionResult result;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_id_buffer;

void set_error(const std::string& message) { g_last_error = message; }

subsel_status map_kind(subsel::ErrorKind kind) {
  switch (kind) {
    case subsel::ErrorKind::kIo:
      return SUBSEL_ERROR_IO;
    case subsel::ErrorKind::kParse:
      return SUBSEL_ERROR_PARSE;
    case subsel::ErrorKind::kValidation:
      return SUBSEL_ERROR_VALIDATION;
    case subsel::ErrorKind::kContract:
      return SUBSEL_ERROR_CONTRACT;
    case subsel::ErrorKind::kRefused:
      return SUBSEL_ERROR_REFUSED;
  }
  return SUBSEL_ERROR_UNKNOWN;
}

template <typename Fn>
subsel_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const subsel::Error& e) {
    set_error(e.what());
    return map_kind(e.kind());
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SUBSEL_ERROR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SUBSEL_ERROR_UNKNOWN;
  } catch (...) {
    set_error("unknown error");
    return SUBSEL_ERROR_UNKNOWN;
  }
}

subsel_status require(bool condition, const char* message) {
  if (condition) return SUBSEL_OK;
  set_error(message);
  return SUBSEL_ERROR_CONTRACT;
}

subsel::FileFormat to_format(subsel_format format) {
  switch (format) {
    case SUBSEL_FORMAT_BINARY:
      return subsel::FileFormat::kBinary;
    case SUBSEL_FORMAT_CSV:
      return subsel::FileFormat::kCsv;
    case SUBSEL_FORMAT_JSONL:
      return subsel::FileFormat::kJsonl;
  }
  throw subsel::Error(subsel::ErrorKind::kContract, "unknown file format");
}

subsel::Method to_method(subsel_method method) {
  switch (method) {
    case SUBSEL_METHOD_SUBSA:
      return subsel::Method::kSubsa;
    case SUBSEL_METHOD_RANDOM:
      return subsel::Method::kRandom;
    case SUBSEL_METHOD_DIVERSITY:
      return subsel::Method::kDiversity;
    case SUBSEL_METHOD_MFL:
      return subsel::Method::kMfl;
    case SUBSEL_METHOD_FAST_VOTEK:
      return subsel::Method::kFastVotek;
    case SUBSEL_METHOD_SUBSA_NAIVE:
      return subsel::Method::kSubsaNaive;
  }
  throw subsel::Error(subsel::ErrorKind::kContract, "unknown method");
}

}  // namespace

extern "C" {

const char* subsel_version(void) { return "1.0.0"; }

const char* subsel_last_error(void) { return g_last_error.c_str(); }

subsel_status subsel_matrix_load(const char* path, subsel_format format,
                                 subsel_matrix** out) {
  if (auto st = require(path && out, "path and out must be non-null"); st)
    return st;
  return guarded([&] {
    auto loaded = subsel::load_embeddings(path, to_format(format));
    *out = new subsel_matrix{std::move(loaded)};
    return SUBSEL_OK;
  });
}

subsel_status subsel_matrix_from_data(const float* data, uint32_t rows,
                                      uint32_t dim, subsel_matrix** out) {
  if (auto st = require(data && out, "data and out must be non-null"); st)
    return st;
  return guarded([&] {
    std::vector<float> copy(data, data + static_cast<size_t>(rows) * dim);
    *out = new subsel_matrix{
        subsel::EmbeddingMatrix(rows, dim, std::move(copy))};
    return SUBSEL_OK;
  });
}

subsel_status subsel_matrix_synthetic(uint32_t rows, uint32_t dim,
                                      uint32_t clusters, uint64_t seed,
                                      subsel_matrix** out) {
  if (auto st = require(out != nullptr, "out must be non-null"); st) return st;
  return guarded([&] {
    *out = new subsel_matrix{
        subsel::synthetic_pool(rows, dim, clusters, seed)};
    return SUBSEL_OK;
  });
}

subsel_status subsel_matrix_save(const subsel_matrix* matrix, const char* path,
                                 subsel_format format) {
  if (auto st = require(matrix && path, "matrix and path must be non-null");
      st)
    return st;
  return guarded([&] {
    subsel::save_embeddings(matrix->matrix, path, to_format(format));
    return SUBSEL_OK;
  });
}

uint32_t subsel_matrix_rows(const subsel_matrix* matrix) {
  return matrix ? matrix->matrix.rows() : 0;
}

uint32_t subsel_matrix_dim(const subsel_matrix* matrix) {
  return matrix ? matrix->matrix.dim() : 0;
}

const float* subsel_matrix_row(const subsel_matrix* matrix, uint32_t i) {
  if (!matrix || i >= matrix->matrix.rows()) return nullptr;
  return matrix->matrix.row(i).data();
}

const char* subsel_matrix_id(const subsel_matrix* matrix, uint32_t i) {
  if (!matrix || i >= matrix->matrix.rows()) return nullptr;
  g_id_buffer = matrix->matrix.id(i);
  return g_id_buffer.c_str();
}

void subsel_matrix_free(subsel_matrix* matrix) { delete matrix; }

subsel_status subsel_kernel(const float* u, const float* v, uint32_t dim,
                            double* out) {
  if (auto st = require(u && v && out, "u, v and out must be non-null"); st)
    return st;
  return guarded([&] {
    *out = subsel::kernel({u, dim}, {v, dim});
    return SUBSEL_OK;
  });
}

subsel_status subsel_model_build(const subsel_matrix* matrix,
                                 uint32_t dense_threshold,
                                 subsel_model** out) {
  if (auto st = require(matrix && out, "matrix and out must be non-null"); st)
    return st;
  return guarded([&] {
    subsel::KernelConfig config;
    if (dense_threshold != 0) config.dense_threshold = dense_threshold;
    *out = new subsel_model{
        subsel::SimilarityModel::build(matrix->matrix, config)};
    return SUBSEL_OK;
  });
}

uint32_t subsel_model_size(const subsel_model* model) {
  return model ? model->model.size() : 0;
}

int subsel_model_has_dense(const subsel_model* model) {
  return model && model->model.has_dense() ? 1 : 0;
}

subsel_status subsel_model_colsum(const subsel_model* model, double* out,
                                  size_t capacity) {
  if (auto st = require(model && out, "model and out must be non-null"); st)
    return st;
  if (auto st = require(capacity >= model->model.size(),
                        "colsum capacity too small");
      st)
    return st;
  const auto& colsum = model->model.colsum();
  std::memcpy(out, colsum.data(), colsum.size() * sizeof(double));
  return SUBSEL_OK;
}

subsel_status subsel_model_similarity(const subsel_model* model, uint32_t a,
                                      uint32_t b, double* out) {
  if (auto st = require(model && out, "model and out must be non-null"); st)
    return st;
  return guarded([&] {
    *out = model->model.similarity(a, b);
    return SUBSEL_OK;
  });
}

void subsel_model_free(subsel_model* model) { delete model; }

void subsel_select_config_init(subsel_select_config* config) {
  if (!config) return;
  config->method = SUBSEL_METHOD_SUBSA;
  config->budget = 1;
  config->lambda1 = 2.0;
  config->lambda2 = -1.0;
  config->seed = 42;
  config->votek_k = 150;
  config->votek_rho = 10.0;
}

subsel_status subsel_select(const subsel_matrix* matrix,
                            const subsel_model* model,
                            const subsel_select_config* config,
                            subsel_result** out) {
  if (auto st = require(matrix && model && config && out,
                        "matrix, model, config and out must be non-null");
      st)
    return st;
  return guarded([&] {
    subsel::SelectConfig cfg;
    cfg.method = to_method(config->method);
    cfg.budget = config->budget;
    cfg.params.lambda1 = config->lambda1;
    cfg.params.lambda2 = config->lambda2;
    cfg.seed = config->seed;
    cfg.votek_k = config->votek_k;
    cfg.votek_rho = config->votek_rho;
    *out = new subsel_result{
        subsel::run_method(matrix->matrix, model->model, cfg)};
    return SUBSEL_OK;
  });
}

subsel_status subsel_objective(const subsel_model* model,
                               const uint32_t* subset, uint32_t length,
                               double lambda1, double lambda2, double* out) {
  if (auto st = require(model && out && (subset || length == 0),
                        "model, subset and out must be non-null");
      st)
    return st;
  return guarded([&] {
    *out = subsel::objective(model->model, {subset, length},
                             {lambda1, lambda2});
    return SUBSEL_OK;
  });
}

subsel_status subsel_marginal_gain(const subsel_model* model,
                                   const uint32_t* subset, uint32_t length,
                                   uint32_t candidate, double lambda1,
                                   double lambda2, double* out) {
  if (auto st = require(model && out && (subset || length == 0),
                        "model, subset and out must be non-null");
      st)
    return st;
  return guarded([&] {
    *out = subsel::marginal_gain(model->model, {subset, length}, candidate,
                                 {lambda1, lambda2});
    return SUBSEL_OK;
  });
}

subsel_status subsel_brute_force_optimum(const subsel_model* model,
                                         uint32_t budget, double lambda1,
                                         double lambda2, uint32_t* out_indices,
                                         uint32_t* out_length,
                                         double* out_value) {
  if (auto st = require(model && out_indices && out_length && out_value,
                        "model and outputs must be non-null");
      st)
    return st;
  return guarded([&] {
    auto [set, value] = subsel::brute_force_optimum(model->model, budget,
                                                    {lambda1, lambda2});
    std::memcpy(out_indices, set.data(), set.size() * sizeof(uint32_t));
    *out_length = static_cast<uint32_t>(set.size());
    *out_value = value;
    return SUBSEL_OK;
  });
}

uint32_t subsel_result_size(const subsel_result* result) {
  return result ? static_cast<uint32_t>(result->result.indices.size()) : 0;
}

subsel_status subsel_result_indices(const subsel_result* result, uint32_t* out,
                                    size_t capacity) {
  if (auto st = require(result && out, "result and out must be non-null"); st)
    return st;
  const auto& indices = result->result.indices;
  if (auto st = require(capacity >= indices.size(), "capacity too small"); st)
    return st;
  std::memcpy(out, indices.data(), indices.size() * sizeof(uint32_t));
  return SUBSEL_OK;
}

uint32_t subsel_result_gain_count(const subsel_result* result) {
  return result ? static_cast<uint32_t>(result->result.step_gains.size()) : 0;
}

subsel_status subsel_result_step_gains(const subsel_result* result,
                                       double* out, size_t capacity) {
  if (auto st = require(result && out, "result and out must be non-null"); st)
    return st;
  const auto& gains = result->result.step_gains;
  if (auto st = require(capacity >= gains.size(), "capacity too small"); st)
    return st;
  std::memcpy(out, gains.data(), gains.size() * sizeof(double));
  return SUBSEL_OK;
}

double subsel_result_objective(const subsel_result* result) {
  return result ? result->result.objective_value : 0.0;
}

double subsel_result_select_ms(const subsel_result* result) {
  return result ? result->result.wall_time_ms : 0.0;
}

const char* subsel_result_method(const subsel_result* result) {
  return result ? result->result.method.c_str() : "";
}

uint32_t subsel_result_pool_size(const subsel_result* result) {
  return result ? result->result.pool_size : 0;
}

uint32_t subsel_result_budget(const subsel_result* result) {
  return result ? result->result.budget : 0;
}

const char* subsel_result_warning(const subsel_result* result) {
  return result ? result->result.warning.c_str() : "";
}

subsel_status subsel_result_set_timings(subsel_result* result, double io_ms,
                                        double build_ms) {
  if (auto st = require(result != nullptr, "result must be non-null"); st)
    return st;
  result->result.io_ms = io_ms;
  result->result.build_ms = build_ms;
  return SUBSEL_OK;
}

subsel_status subsel_result_set_environment(subsel_result* result,
                                            const char* note) {
  if (auto st = require(result && note, "result and note must be non-null");
      st)
    return st;
  result->result.environment = note;
  return SUBSEL_OK;
}

subsel_status subsel_result_save(const subsel_result* result,
                                 const char* path) {
  if (auto st = require(result && path, "result and path must be non-null");
      st)
    return st;
  return guarded([&] {
    subsel::save_selection(result->result, path);
    return SUBSEL_OK;
  });
}

subsel_status subsel_result_load(const char* path, subsel_result** out) {
  if (auto st = require(path && out, "path and out must be non-null"); st)
    return st;
  return guarded([&] {
    *out = new subsel_result{subsel::load_selection(path)};
    return SUBSEL_OK;
  });
}

void subsel_result_free(subsel_result* result) { delete result; }

subsel_status subsel_retrieve(const subsel_matrix* matrix, const float* query,
                              uint32_t dim, const uint32_t* annotated,
                              uint32_t annotated_count, uint32_t shots,
                              uint32_t* out_indices, double* out_scores) {
  if (auto st = require(matrix && query && annotated && out_indices &&
                            out_scores,
                        "all pointer arguments must be non-null");
      st)
    return st;
  return guarded([&] {
    subsel::RetrievalRequest request;
    request.query = {query, dim};
    request.shots = shots;
    request.annotated = {annotated, annotated_count};
    const auto result = subsel::retrieve(matrix->matrix, request);
    for (size_t i = 0; i < result.ordered.size(); ++i) {
      out_indices[i] = result.ordered[i].first;
      out_scores[i] = result.ordered[i].second;
    }
    return SUBSEL_OK;
  });
}

subsel_status subsel_retrieve_random(const subsel_matrix* matrix,
                                     const float* query, uint32_t dim,
                                     const uint32_t* annotated,
                                     uint32_t annotated_count, uint32_t shots,
                                     uint64_t seed, uint32_t* out_indices,
                                     double* out_scores) {
  if (auto st = require(matrix && query && annotated && out_indices &&
                            out_scores,
                        "all pointer arguments must be non-null");
      st)
    return st;
  return guarded([&] {
    subsel::RetrievalRequest request;
    request.query = {query, dim};
    request.shots = shots;
    request.annotated = {annotated, annotated_count};
    const auto result = subsel::random_retrieve(matrix->matrix, request, seed);
    for (size_t i = 0; i < result.ordered.size(); ++i) {
      out_indices[i] = result.ordered[i].first;
      out_scores[i] = result.ordered[i].second;
    }
    return SUBSEL_OK;
  });
}

subsel_status subsel_verify_run(uint32_t trials, uint64_t seed,
                                uint32_t max_pool, uint32_t max_dim,
                                int faulty_kernel, subsel_verify_stats* out) {
  if (auto st = require(out != nullptr, "out must be non-null"); st) return st;
  return guarded([&] {
    subsel::VerifyOptions options;
    options.trials = trials;
    options.seed = seed;
    if (max_pool != 0) options.max_pool = max_pool;
    if (max_dim != 0) options.max_dim = max_dim;
    options.faulty_kernel = faulty_kernel != 0;
    const auto report = subsel::run_verify_suites(options);
    out->monotonicity_checks = report.monotonicity.checks;
    out->monotonicity_failures = report.monotonicity.failures;
    out->submodularity_checks = report.submodularity.checks;
    out->submodularity_failures = report.submodularity.failures;
    out->incremental_checks = report.incremental.checks;
    out->incremental_failures = report.incremental.failures;
    out->bound_checks = report.bound.checks;
    out->bound_failures = report.bound.failures;
    out->monotonicity_ms = report.monotonicity.elapsed_ms;
    out->submodularity_ms = report.submodularity.elapsed_ms;
    out->bound_ms = report.bound.elapsed_ms;
    if (!report.all_passed()) {
      const std::string& why =
          !report.monotonicity.first_failure.empty()
              ? report.monotonicity.first_failure
              : !report.submodularity.first_failure.empty()
                    ? report.submodularity.first_failure
                    : !report.incremental.first_failure.empty()
                          ? report.incremental.first_failure
                          : report.bound.first_failure;
      set_error(why);
    }
    return SUBSEL_OK;
  });
}

}  // extern "C"
