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

// subsel command line: select / retrieve / verify / bench over the C API.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subsel/subsel.h"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

[[noreturn]] void die(const std::string& context) {
  std::cerr << "subsel: error: " << context << ": " << subsel_last_error()
            << "\n";
  std::exit(1);
}

void check(subsel_status status, const std::string& context) {
  if (status != SUBSEL_OK) die(context);
}

const std::map<std::string, subsel_format>& format_map() {
  static const std::map<std::string, subsel_format> map{
      {"binary", SUBSEL_FORMAT_BINARY},
      {"csv", SUBSEL_FORMAT_CSV},
      {"jsonl", SUBSEL_FORMAT_JSONL}};
  return map;
}

const std::map<std::string, subsel_method>& select_method_map() {
  static const std::map<std::string, subsel_method> map{
      {"subsa", SUBSEL_METHOD_SUBSA},
      {"random", SUBSEL_METHOD_RANDOM},
      {"diversity", SUBSEL_METHOD_DIVERSITY},
      {"mfl", SUBSEL_METHOD_MFL},
      {"fast-votek", SUBSEL_METHOD_FAST_VOTEK}};
  return map;
}

const std::map<std::string, subsel_method>& bench_method_map() {
  static const std::map<std::string, subsel_method> map = [] {
    auto m = select_method_map();
    m.emplace("subsa-naive", SUBSEL_METHOD_SUBSA_NAIVE);
    return m;
  }();
  return map;
}

struct MatrixHandle {
  subsel_matrix* ptr = nullptr;
  ~MatrixHandle() { subsel_matrix_free(ptr); }
};

struct ModelHandle {
  subsel_model* ptr = nullptr;
  ~ModelHandle() { subsel_model_free(ptr); }
};

struct ResultHandle {
  subsel_result* ptr = nullptr;
  ~ResultHandle() { subsel_result_free(ptr); }
};

struct SelectArgs {
  std::string embeddings;
  subsel_format format = SUBSEL_FORMAT_BINARY;
  subsel_method method = SUBSEL_METHOD_SUBSA;
  std::uint32_t budget = 1;
  double lambda1 = 2.0;
  double lambda2 = -1.0;
  std::uint64_t seed = 42;
  std::uint32_t votek_k = 150;
  double votek_rho = 10.0;
  std::uint32_t dense_threshold = 20000;
  std::string environment;
  std::string output;
};

int run_select(const SelectArgs& args) {
  MatrixHandle pool;
  const auto io_start = Clock::now();
  check(subsel_matrix_load(args.embeddings.c_str(), args.format, &pool.ptr),
        "loading " + args.embeddings);
  const double io_ms = elapsed_ms(io_start);

  ModelHandle model;
  const auto build_start = Clock::now();
  check(subsel_model_build(pool.ptr, args.dense_threshold, &model.ptr),
        "building similarity model");
  const double build_ms = elapsed_ms(build_start);

  subsel_select_config config;
  subsel_select_config_init(&config);
  config.method = args.method;
  config.budget = args.budget;
  config.lambda1 = args.lambda1;
  config.lambda2 = args.lambda2;
  config.seed = args.seed;
  config.votek_k = args.votek_k;
  config.votek_rho = args.votek_rho;

  ResultHandle result;
  check(subsel_select(pool.ptr, model.ptr, &config, &result.ptr),
        "running selection");
  subsel_result_set_timings(result.ptr, io_ms, build_ms);
  const std::string environment =
      args.environment.empty()
          ? std::to_string(std::thread::hardware_concurrency()) +
                " hardware threads"
          : args.environment;
  subsel_result_set_environment(result.ptr, environment.c_str());

  if (const char* warning = subsel_result_warning(result.ptr); *warning) {
    std::cerr << "subsel: warning: " << warning << "\n";
  }
  check(subsel_result_save(result.ptr, args.output.c_str()),
        "writing " + args.output);

  std::printf(
      "%s: selected %u of %u (objective %.6g, select %.3f ms, build %.3f ms, "
      "io %.3f ms) -> %s\n",
      subsel_result_method(result.ptr), subsel_result_size(result.ptr),
      subsel_matrix_rows(pool.ptr), subsel_result_objective(result.ptr),
      subsel_result_select_ms(result.ptr), build_ms, io_ms,
      args.output.c_str());
  return 0;
}

struct RetrieveArgs {
  std::string embeddings;
  subsel_format format = SUBSEL_FORMAT_BINARY;
  std::string selection;
  std::string queries;
  subsel_format queries_format = SUBSEL_FORMAT_BINARY;
  std::uint32_t shots = 1;
  std::string mode = "similar";
  std::uint64_t seed = 42;
  std::string output;
};

int run_retrieve(const RetrieveArgs& args) {
  MatrixHandle pool;
  check(subsel_matrix_load(args.embeddings.c_str(), args.format, &pool.ptr),
        "loading " + args.embeddings);

  ResultHandle selection;
  check(subsel_result_load(args.selection.c_str(), &selection.ptr),
        "loading " + args.selection);
  if (subsel_result_pool_size(selection.ptr) != subsel_matrix_rows(pool.ptr)) {
    std::cerr << "subsel: error: selection report covers a pool of "
              << subsel_result_pool_size(selection.ptr) << " rows, but "
              << args.embeddings << " has " << subsel_matrix_rows(pool.ptr)
              << "\n";
    return 1;
  }
  std::vector<std::uint32_t> annotated(subsel_result_size(selection.ptr));
  check(subsel_result_indices(selection.ptr, annotated.data(),
                              annotated.size()),
        "reading selection indices");

  MatrixHandle queries;
  check(subsel_matrix_load(args.queries.c_str(), args.queries_format,
                           &queries.ptr),
        "loading " + args.queries);
  if (subsel_matrix_dim(queries.ptr) != subsel_matrix_dim(pool.ptr)) {
    std::cerr << "subsel: error: query dimension "
              << subsel_matrix_dim(queries.ptr)
              << " does not match pool dimension "
              << subsel_matrix_dim(pool.ptr) << "\n";
    return 1;
  }

  std::ofstream out(args.output);
  if (!out) {
    std::cerr << "subsel: error: cannot open " << args.output
              << " for writing\n";
    return 1;
  }
  const std::uint32_t dim = subsel_matrix_dim(pool.ptr);
  std::vector<std::uint32_t> indices(args.shots);
  std::vector<double> scores(args.shots);
  for (std::uint32_t q = 0; q < subsel_matrix_rows(queries.ptr); ++q) {
    const float* query = subsel_matrix_row(queries.ptr, q);
    const subsel_status status =
        args.mode == "random"
            ? subsel_retrieve_random(pool.ptr, query, dim, annotated.data(),
                                     static_cast<std::uint32_t>(
                                         annotated.size()),
                                     args.shots, args.seed + q, indices.data(),
                                     scores.data())
            : subsel_retrieve(pool.ptr, query, dim, annotated.data(),
                              static_cast<std::uint32_t>(annotated.size()),
                              args.shots, indices.data(), scores.data());
    check(status, "retrieving for query " + std::to_string(q));

    nlohmann::json line;
    line["query_id"] = subsel_matrix_id(queries.ptr, q);
    line["shots"] = args.shots;
    nlohmann::json ordered = nlohmann::json::array();
    for (std::uint32_t s = 0; s < args.shots; ++s) {
      ordered.push_back({{"index", indices[s]}, {"score", scores[s]}});
    }
    line["ordered"] = std::move(ordered);
    out << line.dump() << '\n';
  }
  std::printf("retrieved %u shots for %u queries (%s mode) -> %s\n",
              args.shots, subsel_matrix_rows(queries.ptr), args.mode.c_str(),
              args.output.c_str());
  return 0;
}

struct VerifyArgs {
  std::uint32_t trials = 1000;
  std::uint64_t seed = 42;
  std::uint32_t max_pool = 64;
  std::uint32_t max_dim = 16;
  bool faulty_kernel = false;
};

int run_verify(const VerifyArgs& args) {
  subsel_verify_stats stats;
  check(subsel_verify_run(args.trials, args.seed, args.max_pool, args.max_dim,
                          args.faulty_kernel ? 1 : 0, &stats),
        "running verification suites");

  const auto print_suite = [](const char* name, std::uint64_t checks,
                              std::uint64_t failures, double ms) {
    std::printf("%-14s %8llu checks %8llu failures", name,
                static_cast<unsigned long long>(checks),
                static_cast<unsigned long long>(failures));
    if (ms >= 0.0) std::printf("  %10.1f ms", ms);
    std::printf("\n");
  };
  print_suite("monotonicity", stats.monotonicity_checks,
              stats.monotonicity_failures, stats.monotonicity_ms);
  print_suite("submodularity", stats.submodularity_checks,
              stats.submodularity_failures, stats.submodularity_ms);
  print_suite("incremental", stats.incremental_checks,
              stats.incremental_failures, -1.0);
  print_suite("greedy-bound", stats.bound_checks, stats.bound_failures,
              stats.bound_ms);

  const std::uint64_t failures =
      stats.monotonicity_failures + stats.submodularity_failures +
      stats.incremental_failures + stats.bound_failures;
  if (args.trials == 0) {
    std::printf("warning: 0 trials requested; vacuous pass\n");
    return 0;
  }
  if (failures == 0) {
    std::printf("all suites passed\n");
    return 0;
  }
  std::printf("FAILED: %llu violations; first: %s\n",
              static_cast<unsigned long long>(failures), subsel_last_error());
  return 1;
}

struct BenchArgs {
  std::vector<std::uint32_t> sizes;
  std::vector<std::uint32_t> budgets;
  std::vector<std::string> methods;
  std::uint32_t repeats = 1;
  std::uint32_t dim = 768;
  std::uint32_t clusters = 8;
  std::uint64_t seed = 42;
  std::uint32_t votek_k = 150;
  double votek_rho = 10.0;
  double lambda1 = 2.0;
  double lambda2 = -1.0;
  std::uint32_t dense_threshold = 20000;
  std::string output;
};

int run_bench(const BenchArgs& args) {
  std::ofstream out(args.output);
  if (!out) {
    std::cerr << "subsel: error: cannot open " << args.output
              << " for writing\n";
    return 1;
  }
  out << "method,pool_size,budget,repeat,build_ms,select_ms,log10_select_ms,"
         "objective\n";

  for (std::uint32_t size : args.sizes) {
    MatrixHandle pool;
    check(subsel_matrix_synthetic(size, args.dim, args.clusters,
                                  args.seed + size, &pool.ptr),
          "generating synthetic pool of " + std::to_string(size));
    ModelHandle model;
    const auto build_start = Clock::now();
    check(subsel_model_build(pool.ptr, args.dense_threshold, &model.ptr),
          "building similarity model");
    const double build_ms = elapsed_ms(build_start);

    for (const std::string& method : args.methods) {
      const subsel_method method_id = bench_method_map().at(method);
      for (std::uint32_t budget : args.budgets) {
        for (std::uint32_t rep = 0; rep < args.repeats; ++rep) {
          subsel_select_config config;
          subsel_select_config_init(&config);
          config.method = method_id;
          config.budget = budget;
          config.lambda1 = args.lambda1;
          config.lambda2 = args.lambda2;
          config.seed = args.seed;
          config.votek_k = args.votek_k;
          config.votek_rho = args.votek_rho;

          ResultHandle result;
          const subsel_status status =
              subsel_select(pool.ptr, model.ptr, &config, &result.ptr);
          if (status == SUBSEL_ERROR_CONTRACT) {
            // infeasible cell (e.g. votek_k >= pool size): mark and move on
            std::cerr << "subsel: skipping " << method << " n=" << size
                      << " T=" << budget << ": " << subsel_last_error()
                      << "\n";
            out << method << ',' << size << ',' << budget << ',' << rep
                << ',' << build_ms << ",,,\n";
            continue;
          }
          check(status, "benchmark cell " + method);

          const double select_ms = subsel_result_select_ms(result.ptr);
          char row[256];
          std::snprintf(row, sizeof(row), "%s,%u,%u,%u,%.6f,%.6f,%.6f,%.10g\n",
                        method.c_str(), size, budget, rep, build_ms, select_ms,
                        std::log10(std::max(select_ms, 1e-6)),
                        subsel_result_objective(result.ptr));
          out << row;
        }
      }
    }
  }
  std::printf("benchmark written to %s\n", args.output.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subset selection toolkit: reward/penalty submodular greedy "
               "selection, baselines, prompt retrieval and timing harness"};
  app.require_subcommand(1);

  SelectArgs select_args;
  auto* select = app.add_subcommand(
      "select", "select an annotation subset from an embedding pool");
  select->add_option("--embeddings", select_args.embeddings,
                     "embedding pool file")
      ->required();
  select->add_option("--format", select_args.format, "pool file format")
      ->transform(CLI::CheckedTransformer(format_map(), CLI::ignore_case));
  select->add_option("--method", select_args.method, "selection method")
      ->transform(
          CLI::CheckedTransformer(select_method_map(), CLI::ignore_case));
  select->add_option("--budget", select_args.budget, "annotation budget T")
      ->required()
      ->check(CLI::PositiveNumber);
  select->add_option("--lambda1", select_args.lambda1,
                     "representative weight (default 2)");
  select->add_option("--lambda2", select_args.lambda2,
                     "diverse weight (default -1)");
  select->add_option("--seed", select_args.seed, "random method seed");
  select->add_option("--votek-k", select_args.votek_k,
                     "fast-votek neighbor count");
  select->add_option("--votek-rho", select_args.votek_rho,
                     "fast-votek discount base");
  select->add_option("--dense-threshold", select_args.dense_threshold,
                     "max pool size for the dense similarity matrix");
  select->add_option("--environment", select_args.environment,
                     "hardware note stored in the report");
  select->add_option("--output", select_args.output, "report JSON path")
      ->required();

  RetrieveArgs retrieve_args;
  auto* retrieve = app.add_subcommand(
      "retrieve", "retrieve the most similar selected examples per query");
  retrieve->add_option("--embeddings", retrieve_args.embeddings,
                       "embedding pool file")
      ->required();
  retrieve->add_option("--format", retrieve_args.format, "pool file format")
      ->transform(CLI::CheckedTransformer(format_map(), CLI::ignore_case));
  retrieve->add_option("--selection", retrieve_args.selection,
                       "selection report JSON")
      ->required();
  retrieve->add_option("--queries", retrieve_args.queries,
                       "query embeddings file")
      ->required();
  retrieve->add_option("--queries-format", retrieve_args.queries_format,
                       "query file format")
      ->transform(CLI::CheckedTransformer(format_map(), CLI::ignore_case));
  retrieve->add_option("--shots", retrieve_args.shots,
                       "in-context examples per query")
      ->required()
      ->check(CLI::PositiveNumber);
  retrieve->add_option("--mode", retrieve_args.mode, "similar or random")
      ->check(CLI::IsMember({"similar", "random"}));
  retrieve->add_option("--seed", retrieve_args.seed, "random mode seed");
  retrieve->add_option("--output", retrieve_args.output,
                       "retrieval JSONL path")
      ->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "run the objective property suites on random instances");
  verify->add_option("--trials", verify_args.trials, "trials per suite");
  verify->add_option("--seed", verify_args.seed, "base seed");
  verify->add_option("--max-n", verify_args.max_pool,
                     "max pool size per instance");
  verify->add_option("--max-d", verify_args.max_dim,
                     "max embedding dimension per instance");
  verify->add_flag("--inject-faulty-kernel", verify_args.faulty_kernel,
                   "use a signed kernel to demonstrate suite failures");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "time selection methods over synthetic pools, CSV output");
  bench->add_option("--sizes", bench_args.sizes, "pool sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--budgets", bench_args.budgets, "annotation budgets")
      ->required()
      ->delimiter(',');
  bench->add_option("--methods", bench_args.methods, "methods to time")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"subsa", "random", "diversity", "mfl",
                             "fast-votek", "subsa-naive"}));
  bench->add_option("--repeats", bench_args.repeats, "runs per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--dim", bench_args.dim, "synthetic embedding dimension");
  bench->add_option("--clusters", bench_args.clusters,
                    "synthetic mixture clusters");
  bench->add_option("--seed", bench_args.seed, "synthetic pool seed");
  bench->add_option("--votek-k", bench_args.votek_k,
                    "fast-votek neighbor count");
  bench->add_option("--votek-rho", bench_args.votek_rho,
                    "fast-votek discount base");
  bench->add_option("--lambda1", bench_args.lambda1, "representative weight");
  bench->add_option("--lambda2", bench_args.lambda2, "diverse weight");
  bench->add_option("--dense-threshold", bench_args.dense_threshold,
                    "max pool size for the dense similarity matrix");
  bench->add_option("--output", bench_args.output, "CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  if (select->parsed()) return run_select(select_args);
  if (retrieve->parsed()) return run_retrieve(retrieve_args);
  if (verify->parsed()) return run_verify(verify_args);
  if (bench->parsed()) return run_bench(bench_args);
  return 1;
}
