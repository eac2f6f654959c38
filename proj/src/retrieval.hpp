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

#ifndef SUBSEL_RETRIEVAL_HPP_
#define SUBSEL_RETRIEVAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"

namespace subsel {

struct RetrievalRequest {
  std::span<const float> query;
  std::uint32_t shots = 1;
  std::span<const std::uint32_t> annotated;  // indices into the pool
};

// Scored pool indices in prompt order: least similar first, most similar
// last (adjacent to the test input when assembled into a prompt).
struct RetrievalResult {
  std::vector<std::pair<std::uint32_t, double>> ordered;
  std::string query_id;
};

// Top-`shots` annotated examples by kernel similarity to the query. Equal
// scores rank the lower pool index as more similar.
RetrievalResult retrieve(const EmbeddingMatrix& pool,
                         const RetrievalRequest& request);

// Seeded uniform sample of `shots` annotated examples, in draw order.
// Scores are still the kernel values so the output stays inspectable.
RetrievalResult random_retrieve(const EmbeddingMatrix& pool,
                                const RetrievalRequest& request,
                                std::uint64_t seed);

}  // namespace subsel

#endif  // SUBSEL_RETRIEVAL_HPP_
