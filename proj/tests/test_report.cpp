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
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "error.hpp"
#include "report.hpp"
#include "rng.hpp"

using namespace subsel;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("subsel_report_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SelectionResult random_result(Rng& rng) {
  SelectionResult r;
  const char* methods[] = {"subsa", "random", "diversity", "mfl",
                           "fast-votek"};
  r.method = methods[bounded(rng, 5)];
  r.pool_size = 10 + static_cast<std::uint32_t>(bounded(rng, 4000));
  const std::uint32_t count =
      1 + static_cast<std::uint32_t>(bounded(rng, 20));
  r.budget = count;
  r.indices = sample_without_replacement(rng, r.pool_size, count);
  if (r.method != std::string("random")) {
    for (std::uint32_t i = 0; i < count; ++i) {
      r.step_gains.push_back(normal(rng) * 10.0);
    }
  }
  r.objective_value = normal(rng) * 100.0;
  r.wall_time_ms = uniform01(rng) * 50.0;
  r.build_ms = bounded(rng, 2) ? uniform01(rng) * 1000.0 : -1.0;
  r.io_ms = bounded(rng, 2) ? uniform01(rng) * 100.0 : -1.0;
  r.environment = bounded(rng, 2) ? "4 hardware threads" : "";
  r.warning = bounded(rng, 4) == 0 ? "non-default weights" : "";
  r.params.lambda1 = normal(rng);
  r.params.lambda2 = normal(rng);
  r.seed = rng();
  r.votek_k = static_cast<std::uint32_t>(1 + bounded(rng, 300));
  r.votek_rho = 1.0 + uniform01(rng) * 20.0;
  return r;
}

bool equal(const SelectionResult& a, const SelectionResult& b) {
  return a.method == b.method && a.pool_size == b.pool_size &&
         a.budget == b.budget && a.indices == b.indices &&
         a.step_gains == b.step_gains &&
         a.objective_value == b.objective_value &&
         a.wall_time_ms == b.wall_time_ms && a.build_ms == b.build_ms &&
         a.io_ms == b.io_ms && a.environment == b.environment &&
         a.warning == b.warning && a.params.lambda1 == b.params.lambda1 &&
         a.params.lambda2 == b.params.lambda2 && a.seed == b.seed &&
         a.votek_k == b.votek_k && a.votek_rho == b.votek_rho;
}

}  // namespace

TEST_CASE("single-index report serializes compactly") {
  SelectionResult r;
  r.method = "subsa";
  r.pool_size = 1;
  r.budget = 1;
  r.indices = {0};
  r.step_gains = {1.0};
  r.objective_value = 1.0;
  const auto path = temp_file("single.json");
  save_selection(r, path.string());
  const std::string content = slurp(path);
  CHECK(content.find("\"indices\":[0]") != std::string::npos);
}

TEST_CASE("100 indices appear in selection order") {
  Rng rng(101);
  SelectionResult r;
  r.method = "subsa";
  r.pool_size = 3000;
  r.budget = 100;
  r.indices = sample_without_replacement(rng, 3000, 100);
  r.step_gains.assign(100, 1.0);
  r.objective_value = 100.0;
  const auto path = temp_file("hundred.json");
  save_selection(r, path.string());
  const auto loaded = load_selection(path.string());
  CHECK(loaded.indices == r.indices);
  CHECK(loaded.indices.size() == 100);
}

TEST_CASE("save/load round-trips 100 random results bit-exactly") {
  Rng rng(103);
  const auto path = temp_file("roundtrip.json");
  for (int trial = 0; trial < 100; ++trial) {
    const auto original = random_result(rng);
    save_selection(original, path.string());
    const auto loaded = load_selection(path.string());
    CHECK(equal(original, loaded));
    // double round trip: identical file bytes
    const std::string first = slurp(path);
    save_selection(loaded, path.string());
    CHECK(slurp(path) == first);
  }
}

TEST_CASE("load rejects broken reports") {
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_selection("/nonexistent/report.json"), Error);
  }
  SUBCASE("not json") {
    const auto path = temp_file("garbage.json");
    std::ofstream(path) << "not json at all";
    CHECK_THROWS_AS(load_selection(path.string()), Error);
  }
  SUBCASE("missing field") {
    const auto path = temp_file("missing.json");
    std::ofstream(path) << "{\"method\":\"subsa\"}";
    CHECK_THROWS_WITH_AS(load_selection(path.string()),
                         doctest::Contains("missing report field"), Error);
  }
  SUBCASE("out-of-range index") {
    const auto path = temp_file("oob.json");
    std::ofstream(path)
        << R"({"method":"subsa","pool_size":2,"budget":1,"indices":[5],)"
        << R"("step_gains":[1.0],"objective_value":1.0,"wall_time_ms":0.0})";
    CHECK_THROWS_WITH_AS(load_selection(path.string()),
                         doctest::Contains("out of range"), Error);
  }
}

TEST_CASE("unwritable sink raises an io error") {
  SelectionResult r;
  r.method = "subsa";
  r.pool_size = 1;
  r.budget = 1;
  r.indices = {0};
  r.step_gains = {1.0};
  CHECK_THROWS_AS(save_selection(r, "/nonexistent/dir/report.json"), Error);
}
