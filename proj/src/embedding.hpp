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

#ifndef SUBSEL_EMBEDDING_HPP_
#define SUBSEL_EMBEDDING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subsel {

enum class FileFormat { kBinary, kCsv, kJsonl };

// Row-major pool of embedding vectors. Immutable once constructed, and
// construction enforces the full data contract: N >= 1, d >= 1, every value
// finite, every row of strictly positive Euclidean norm, ids (when given)
// unique and one per row. Anything downstream may therefore assume a valid
// pool.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix(std::uint32_t rows, std::uint32_t dim,
                  std::vector<float> data,
                  std::vector<std::string> ids = {});

  std::uint32_t rows() const { return rows_; }
  std::uint32_t dim() const { return dim_; }
  std::span<const float> row(std::uint32_t i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, dim_};
  }
  const std::vector<float>& data() const { return data_; }

  bool has_explicit_ids() const { return !ids_.empty(); }
  // Explicit id when the source file carried one, else the row index.
  std::string id(std::uint32_t i) const;

 private:
  std::uint32_t rows_;
  std::uint32_t dim_;
  std::vector<float> data_;
  std::vector<std::string> ids_;
};

// Free-form example payload carried alongside an embedding row (JSONL only).
struct ExampleRecord {
  std::string id;
  std::string text;
  std::optional<std::string> label;
};

struct LoadedPool {
  EmbeddingMatrix matrix;
  std::vector<ExampleRecord> records;  // only rows that carried text
};

// File layout, binary format:
//   magic "SUBSAEMB" | u32le rows | u32le dim | rows*dim f32le, row-major
// CSV: one row per line of comma-separated floats, optional "# d=<d>" header.
// JSONL: one object per line, {"id": str?, "embedding": [f...], "text": str?,
// "label": str?}.
EmbeddingMatrix load_embeddings(const std::string& path, FileFormat format);
LoadedPool load_embeddings_with_records(const std::string& path,
                                        FileFormat format);

// Binary writes are bit-exact; text formats use 9 significant digits, which
// round-trips 32-bit floats exactly.
void save_embeddings(const EmbeddingMatrix& matrix, const std::string& path,
                     FileFormat format);

FileFormat parse_format(const std::string& name);
const char* format_name(FileFormat format);

}  // namespace subsel

#endif  // SUBSEL_EMBEDDING_HPP_
