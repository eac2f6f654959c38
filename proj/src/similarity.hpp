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

#ifndef SUBSEL_SIMILARITY_HPP_
#define SUBSEL_SIMILARITY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "embedding.hpp"

namespace subsel {

// Non-negative cosine similarity: max(0, cos(u, v)), clamped into [0, 1].
// Accumulates in double; throws on dimension mismatch or zero-norm input.
double kernel(std::span<const float> u, std::span<const float> v);

struct KernelConfig {
  // Negative cosines are clamped to zero; clamping keeps the ordering of all
  // non-negative pairs intact, which the greedy guarantees rely on.
  enum class NonnegMode { kClampZero };
  NonnegMode nonneg_mode = NonnegMode::kClampZero;

  // Largest pool for which the full N x N matrix is materialized. Above it,
  // column sums are streamed and rows are recomputed on demand.
  std::uint32_t dense_threshold = 20000;
};

// Derived similarity state over one pool: per-candidate column sums
// colsum[a] = sum_i s(a, i) and, when N <= dense_threshold, the dense matrix
// of s values. Rows are L2-normalized once at build; thereafter every kernel
// evaluation is a clamped dot product accumulated in double over ascending
// index, so results do not depend on the degree of build parallelism.
// Immutable after build.
class SimilarityModel {
 public:
  static SimilarityModel build(const EmbeddingMatrix& pool,
                               const KernelConfig& config = {});

  // Wraps a precomputed similarity matrix (row-major n x n). The diagonal is
  // forced to exactly 1 and column sums are recomputed. Entries are taken
  // as-is, so callers can inject kernels that break the [0,1] contract when
  // probing the property suites.
  static SimilarityModel from_dense(std::vector<float> dense, std::uint32_t n,
                                    const KernelConfig& config = {});

  std::uint32_t size() const { return n_; }
  std::uint32_t source_dim() const { return dim_; }
  const KernelConfig& config() const { return config_; }
  bool has_dense() const { return !dense_.empty(); }

  const std::vector<double>& colsum() const { return colsum_; }

  // Single similarity value; dense lookup when available.
  double similarity(std::uint32_t a, std::uint32_t b) const;

  // Row a of the similarity matrix. Returns a view into the dense matrix
  // when materialized; otherwise computes into `scratch`.
  std::span<const float> row(std::uint32_t a,
                             std::vector<float>& scratch) const;

  // L2-normalized source row (unavailable for from_dense models).
  std::span<const float> normalized_row(std::uint32_t i) const;

 private:
  SimilarityModel() = default;
  void compute_row(std::uint32_t a, float* out) const;

  std::uint32_t n_ = 0;
  std::uint32_t dim_ = 0;
  KernelConfig config_;
  std::vector<float> normalized_;  // n x dim, empty for from_dense
  std::vector<float> dense_;       // n x n when materialized
  std::vector<double> colsum_;     // length n
};

}  // namespace subsel

#endif  // SUBSEL_SIMILARITY_HPP_
