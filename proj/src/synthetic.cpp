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

#include "synthetic.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace subsel {

EmbeddingMatrix synthetic_pool(std::uint32_t rows, std::uint32_t dim,
                               std::uint32_t clusters, std::uint64_t seed,
                               double noise) {
  if (rows == 0 || dim == 0 || clusters == 0) {
    throw Error(ErrorKind::kContract,
                "synthetic pool needs rows, dim and clusters >= 1");
  }
  Rng rng(seed);
  std::vector<double> centers(static_cast<std::size_t>(clusters) * dim);
  for (double& c : centers) c = normal(rng);

  std::vector<float> data(static_cast<std::size_t>(rows) * dim);
  for (std::uint32_t i = 0; i < rows; ++i) {
    const double* center =
        centers.data() + static_cast<std::size_t>(i % clusters) * dim;
    float* row = data.data() + static_cast<std::size_t>(i) * dim;
    double norm_sq = 0.0;
    for (std::uint32_t j = 0; j < dim; ++j) {
      row[j] = static_cast<float>(center[j] + noise * normal(rng));
      norm_sq += static_cast<double>(row[j]) * row[j];
    }
    if (norm_sq <= 0.0) row[0] = 1.0f;  // never triggers in practice
  }
  return EmbeddingMatrix(rows, dim, std::move(data));
}

}  // namespace subsel
