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

#include "retrieval.hpp"

#include <algorithm>

#include "error.hpp"
#include "rng.hpp"
#include "similarity.hpp"

namespace subsel {
namespace {

void check_request(const EmbeddingMatrix& pool,
                   const RetrievalRequest& request) {
  if (request.query.size() != pool.dim()) {
    throw Error(ErrorKind::kContract,
                "query dimension " + std::to_string(request.query.size()) +
                    " does not match pool dimension " +
                    std::to_string(pool.dim()));
  }
  if (request.annotated.empty()) {
    throw Error(ErrorKind::kContract, "annotated set is empty");
  }
  if (request.shots < 1 || request.shots > request.annotated.size()) {
    throw Error(ErrorKind::kContract,
                "shots (" + std::to_string(request.shots) +
                    ") must be in [1, annotated size " +
                    std::to_string(request.annotated.size()) + "]");
  }
  std::vector<char> seen(pool.rows(), 0);
  for (std::uint32_t a : request.annotated) {
    if (a >= pool.rows()) {
      throw Error(ErrorKind::kContract, "annotated index " +
                                            std::to_string(a) +
                                            " out of range");
    }
    if (seen[a]) {
      throw Error(ErrorKind::kContract,
                  "duplicate annotated index " + std::to_string(a));
    }
    seen[a] = 1;
  }
}

}  // namespace

RetrievalResult retrieve(const EmbeddingMatrix& pool,
                         const RetrievalRequest& request) {
  check_request(pool, request);
  std::vector<std::pair<std::uint32_t, double>> scored;
  scored.reserve(request.annotated.size());
  for (std::uint32_t a : request.annotated) {
    scored.emplace_back(a, kernel(request.query, pool.row(a)));
  }
  // most similar first; equal scores favor the lower pool index
  std::sort(scored.begin(), scored.end(),
            [](const auto& lhs, const auto& rhs) {
              if (lhs.second != rhs.second) return lhs.second > rhs.second;
              return lhs.first < rhs.first;
            });
  scored.resize(request.shots);
  std::reverse(scored.begin(), scored.end());  // prompt order

  RetrievalResult result;
  result.ordered = std::move(scored);
  return result;
}

RetrievalResult random_retrieve(const EmbeddingMatrix& pool,
                                const RetrievalRequest& request,
                                std::uint64_t seed) {
  check_request(pool, request);
  Rng rng(seed);
  const auto picks = sample_without_replacement(
      rng, static_cast<std::uint32_t>(request.annotated.size()),
      request.shots);

  RetrievalResult result;
  result.ordered.reserve(request.shots);
  for (std::uint32_t p : picks) {
    const std::uint32_t a = request.annotated[p];
    result.ordered.emplace_back(a, kernel(request.query, pool.row(a)));
  }
  return result;
}

}  // namespace subsel
