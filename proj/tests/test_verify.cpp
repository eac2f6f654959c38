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
#include "doctest.h"
#include "verify.hpp"

using namespace subsel;

TEST_CASE("suites pass on the clamped kernel") {
  VerifyOptions options;
  options.trials = 200;
  options.seed = 7;
  const auto report = run_verify_suites(options);
  CHECK(report.all_passed());
  CHECK(report.monotonicity.checks == 200);
  CHECK(report.submodularity.checks == 200);
  CHECK(report.bound.checks == 200);
  CHECK(report.incremental.checks > 400);
  CHECK(report.monotonicity.first_failure.empty());
}

TEST_CASE("a signed kernel is caught by the monotonicity suite") {
  VerifyOptions options;
  options.trials = 100;
  options.seed = 7;
  options.faulty_kernel = true;
  const auto report = run_verify_suites(options);
  CHECK(report.monotonicity.failures > 0);
  CHECK(!report.monotonicity.first_failure.empty());
  CHECK(!report.all_passed());
  // the cached-gain algebra holds regardless of the kernel's sign
  CHECK(report.incremental.failures == 0);
}

TEST_CASE("zero trials pass vacuously") {
  VerifyOptions options;
  options.trials = 0;
  const auto report = run_verify_suites(options);
  CHECK(report.all_passed());
  CHECK(report.monotonicity.checks == 0);
  CHECK(report.incremental.checks == 0);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  VerifyOptions options;
  options.trials = 50;
  options.seed = 99;
  const auto a = run_verify_suites(options);
  const auto b = run_verify_suites(options);
  CHECK(a.monotonicity.failures == b.monotonicity.failures);
  CHECK(a.incremental.checks == b.incremental.checks);
  options.seed = 100;
  const auto c = run_verify_suites(options);
  CHECK(c.all_passed());
}
