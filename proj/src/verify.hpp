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

// Property suites over seeded random instances: monotone gains, diminishing
// returns for nested subsets, cached-gain vs direct-recomputation agreement,
// and the greedy (1 - 1/e) bound against exhaustive optima.

#ifndef SUBSEL_VERIFY_HPP_
#define SUBSEL_VERIFY_HPP_

#include <cstdint>
#include <string>

namespace subsel {

struct VerifyOptions {
  std::uint32_t trials = 1000;
  std::uint64_t seed = 42;
  std::uint32_t max_pool = 64;  // monotonicity/submodularity instances
  std::uint32_t max_dim = 16;
  std::uint32_t bound_max_pool = 14;  // bound suite stays enumerable
  std::uint32_t bound_max_budget = 4;
  // Replaces the clamped kernel with raw signed cosine. The guarantees do
  // not hold there, so the suites are expected to catch violations; used to
  // prove the suites can fail.
  bool faulty_kernel = false;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double elapsed_ms = 0.0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  SuiteResult monotonicity;
  SuiteResult submodularity;
  SuiteResult incremental;
  SuiteResult bound;

  bool all_passed() const {
    return monotonicity.passed() && submodularity.passed() &&
           incremental.passed() && bound.passed();
  }
};

VerifyReport run_verify_suites(const VerifyOptions& options);

}  // namespace subsel

#endif  // SUBSEL_VERIFY_HPP_
