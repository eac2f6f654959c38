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

#include "similarity.hpp"

#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace subsel {
namespace {

double clamp01(double v) {
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

double dot_f64(const float* a, const float* b, std::uint32_t dim) {
  double acc = 0.0;
  for (std::uint32_t j = 0; j < dim; ++j) {
    acc += static_cast<double>(a[j]) * static_cast<double>(b[j]);
  }
  return acc;
}

}  // namespace

double kernel(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size() || u.empty()) {
    throw Error(ErrorKind::kContract,
                "kernel: dimension mismatch (" + std::to_string(u.size()) +
                    " vs " + std::to_string(v.size()) + ")");
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = u[j];
    const double y = v[j];
    dot += x * y;
    uu += x * x;
    vv += y * y;
  }
  if (uu <= 0.0 || vv <= 0.0) {
    throw Error(ErrorKind::kContract, "kernel: zero-norm input");
  }
  return clamp01(dot / (std::sqrt(uu) * std::sqrt(vv)));
}

SimilarityModel SimilarityModel::build(const EmbeddingMatrix& pool,
                                       const KernelConfig& config) {
  if (config.dense_threshold < 1) {
    throw Error(ErrorKind::kContract, "dense_threshold must be >= 1");
  }
  SimilarityModel m;
  m.n_ = pool.rows();
  m.dim_ = pool.dim();
  m.config_ = config;

  m.normalized_.resize(static_cast<std::size_t>(m.n_) * m.dim_);
  for (std::uint32_t i = 0; i < m.n_; ++i) {
    const auto src = pool.row(i);
    double norm_sq = 0.0;
    for (float v : src) norm_sq += static_cast<double>(v) * v;
    const double inv = 1.0 / std::sqrt(norm_sq);  // rows() forbids zero norm
    float* dst = m.normalized_.data() + static_cast<std::size_t>(i) * m.dim_;
    for (std::uint32_t j = 0; j < m.dim_; ++j) {
      dst[j] = static_cast<float>(src[j] * inv);
    }
  }

  m.colsum_.assign(m.n_, 0.0);
  const bool materialize = m.n_ <= config.dense_threshold;
  if (materialize) {
    m.dense_.resize(static_cast<std::size_t>(m.n_) * m.n_);
  }

  parallel_for(m.n_, [&m, materialize](std::size_t begin, std::size_t end) {
    std::vector<float> scratch;
    if (!materialize) scratch.resize(m.n_);
    for (std::size_t a = begin; a < end; ++a) {
      float* out = materialize ? m.dense_.data() + a * m.n_ : scratch.data();
      m.compute_row(static_cast<std::uint32_t>(a), out);
      double sum = 0.0;
      for (std::uint32_t i = 0; i < m.n_; ++i) sum += out[i];
      m.colsum_[a] = sum;
    }
  });
  return m;
}

SimilarityModel SimilarityModel::from_dense(std::vector<float> dense,
                                            std::uint32_t n,
                                            const KernelConfig& config) {
  if (n == 0 || dense.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::kContract,
                "from_dense: matrix size does not match n x n");
  }
  SimilarityModel m;
  m.n_ = n;
  m.dim_ = 0;
  m.config_ = config;
  m.dense_ = std::move(dense);
  for (std::uint32_t a = 0; a < n; ++a) {
    m.dense_[static_cast<std::size_t>(a) * n + a] = 1.0f;
  }
  m.colsum_.assign(n, 0.0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const float* row = m.dense_.data() + static_cast<std::size_t>(a) * n;
    double sum = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) sum += row[i];
    m.colsum_[a] = sum;
  }
  return m;
}

void SimilarityModel::compute_row(std::uint32_t a, float* out) const {
  const float* na = normalized_.data() + static_cast<std::size_t>(a) * dim_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const float* ni = normalized_.data() + static_cast<std::size_t>(i) * dim_;
    out[i] = static_cast<float>(clamp01(dot_f64(na, ni, dim_)));
  }
  out[a] = 1.0f;  // self-similarity is 1 by definition
}

double SimilarityModel::similarity(std::uint32_t a, std::uint32_t b) const {
  if (a >= n_ || b >= n_) {
    throw Error(ErrorKind::kContract, "similarity: index out of range");
  }
  if (a == b) return 1.0;
  if (has_dense()) {
    return dense_[static_cast<std::size_t>(a) * n_ + b];
  }
  const float* na = normalized_.data() + static_cast<std::size_t>(a) * dim_;
  const float* nb = normalized_.data() + static_cast<std::size_t>(b) * dim_;
  return static_cast<float>(clamp01(dot_f64(na, nb, dim_)));
}

std::span<const float> SimilarityModel::row(std::uint32_t a,
                                            std::vector<float>& scratch) const {
  if (a >= n_) {
    throw Error(ErrorKind::kContract, "row: index out of range");
  }
  if (has_dense()) {
    return {dense_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  scratch.resize(n_);
  compute_row(a, scratch.data());
  return {scratch.data(), n_};
}

std::span<const float> SimilarityModel::normalized_row(std::uint32_t i) const {
  if (normalized_.empty()) {
    throw Error(ErrorKind::kContract,
                "normalized rows unavailable for precomputed models");
  }
  if (i >= n_) {
    throw Error(ErrorKind::kContract, "normalized_row: index out of range");
  }
  return {normalized_.data() + static_cast<std::size_t>(i) * dim_, dim_};
}

}  // namespace subsel
