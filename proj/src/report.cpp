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

#include "report.hpp"

#include <fstream>
#include <thread>

#include "error.hpp"
#include "json.hpp"

namespace subsel {
namespace {

using nlohmann::json;

template <typename T>
T require_field(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) {
    throw Error(ErrorKind::kParse,
                path + ": missing report field '" + std::string(key) + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": bad report field '" +
                                       std::string(key) + "': " + e.what());
  }
}

}  // namespace

void save_selection(const SelectionResult& result, const std::string& path) {
  json config;
  config["lambda1"] = result.params.lambda1;
  config["lambda2"] = result.params.lambda2;
  config["seed"] = result.seed;
  config["votek_k"] = result.votek_k;
  config["votek_rho"] = result.votek_rho;

  json report;
  report["method"] = result.method;
  report["pool_size"] = result.pool_size;
  report["budget"] = result.budget;
  report["indices"] = result.indices;
  report["step_gains"] = result.step_gains;
  report["objective_value"] = result.objective_value;
  report["wall_time_ms"] = result.wall_time_ms;
  report["build_ms"] = result.build_ms;
  report["io_ms"] = result.io_ms;
  report["environment"] = result.environment;
  report["warnings"] =
      result.warning.empty() ? json::array() : json::array({result.warning});
  report["config"] = std::move(config);

  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  }
  out << report.dump() << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path + "'");
}

SelectionResult load_selection(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  }
  json report;
  try {
    in >> report;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }

  SelectionResult result;
  result.method = require_field<std::string>(report, "method", path);
  result.pool_size = require_field<std::uint32_t>(report, "pool_size", path);
  result.budget = require_field<std::uint32_t>(report, "budget", path);
  result.indices =
      require_field<std::vector<std::uint32_t>>(report, "indices", path);
  result.step_gains =
      require_field<std::vector<double>>(report, "step_gains", path);
  result.objective_value =
      require_field<double>(report, "objective_value", path);
  result.wall_time_ms = require_field<double>(report, "wall_time_ms", path);
  try {
    if (report.contains("build_ms")) result.build_ms = report["build_ms"];
    if (report.contains("io_ms")) result.io_ms = report["io_ms"];
    if (report.contains("environment") && report["environment"].is_string()) {
      result.environment = report["environment"];
    }
    if (report.contains("warnings") && report["warnings"].is_array() &&
        !report["warnings"].empty()) {
      result.warning = report["warnings"][0].get<std::string>();
    }
    if (report.contains("config")) {
      const json& config = report["config"];
      if (config.contains("lambda1")) {
        result.params.lambda1 = config["lambda1"];
      }
      if (config.contains("lambda2")) {
        result.params.lambda2 = config["lambda2"];
      }
      if (config.contains("seed")) result.seed = config["seed"];
      if (config.contains("votek_k")) result.votek_k = config["votek_k"];
      if (config.contains("votek_rho")) result.votek_rho = config["votek_rho"];
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }

  for (std::uint32_t idx : result.indices) {
    if (idx >= result.pool_size) {
      throw Error(ErrorKind::kValidation,
                  path + ": index " + std::to_string(idx) +
                      " out of range for pool_size " +
                      std::to_string(result.pool_size));
    }
  }
  return result;
}

std::string default_environment_note() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::to_string(hw ? hw : 1) + " hardware threads";
}

}  // namespace subsel
