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

#include "embedding.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "error.hpp"
#include "json.hpp"

namespace subsel {
namespace {

constexpr char kMagic[8] = {'S', 'U', 'B', 'S', 'A', 'E', 'M', 'B'};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

void write_u32le(std::ostream& out, std::uint32_t v) {
  const unsigned char bytes[4] = {
      static_cast<unsigned char>(v & 0xff),
      static_cast<unsigned char>((v >> 8) & 0xff),
      static_cast<unsigned char>((v >> 16) & 0xff),
      static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(bytes), 4);
}

EmbeddingMatrix load_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open '" + path + "' for reading");

  char magic[8];
  in.read(magic, 8);
  if (in.gcount() != 8 || std::memcmp(magic, kMagic, 8) != 0) {
    fail(ErrorKind::kParse, path + ": bad magic at byte 0 (expect SUBSAEMB)");
  }
  unsigned char header[8];
  in.read(reinterpret_cast<char*>(header), 8);
  if (in.gcount() != 8) {
    fail(ErrorKind::kParse, path + ": truncated header at byte 8");
  }
  const std::uint32_t rows = read_u32le(header);
  const std::uint32_t dim = read_u32le(header + 4);
  if (rows == 0 || dim == 0) {
    fail(ErrorKind::kValidation,
         path + ": pool must have N >= 1 rows and d >= 1 dimensions");
  }

  const std::size_t count = static_cast<std::size_t>(rows) * dim;
  std::vector<unsigned char> raw(count * 4);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    fail(ErrorKind::kParse,
         path + ": truncated payload at byte " +
             std::to_string(16 + static_cast<std::size_t>(in.gcount())));
  }

  std::vector<float> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    data[i] = std::bit_cast<float>(read_u32le(raw.data() + i * 4));
  }
  return EmbeddingMatrix(rows, dim, std::move(data));
}

// Full-token float parse; rejects trailing garbage like "1.5x".
bool parse_float_token(const std::string& token, float* out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) return false;
  *out = static_cast<float>(value);
  return true;
}

EmbeddingMatrix load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open '" + path + "' for reading");

  std::vector<float> data;
  std::uint32_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::uint32_t header_dim = 0;
      if (std::sscanf(line.c_str(), "# d=%u", &header_dim) == 1 &&
          header_dim > 0) {
        if (dim != 0 && dim != header_dim) {
          fail(ErrorKind::kParse,
               path + ": line " + std::to_string(line_no) +
                   ": header dimension conflicts with earlier rows");
        }
        dim = header_dim;
      }
      continue;
    }

    std::uint32_t fields = 0;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
      float value = 0.0f;
      if (!parse_float_token(token, &value)) {
        fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                    ": cannot parse value '" + token + "'");
      }
      data.push_back(value);
      ++fields;
    }
    if (fields == 0) {
      fail(ErrorKind::kParse,
           path + ": line " + std::to_string(line_no) + ": empty row");
    }
    if (dim == 0) {
      dim = fields;
    } else if (fields != dim) {
      fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(dim) +
                                  " values, got " + std::to_string(fields));
    }
  }
  if (dim == 0 || data.empty()) {
    fail(ErrorKind::kValidation, path + ": no embedding rows found");
  }
  const std::uint32_t rows = static_cast<std::uint32_t>(data.size() / dim);
  return EmbeddingMatrix(rows, dim, std::move(data));
}

LoadedPool load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open '" + path + "' for reading");

  std::vector<float> data;
  std::vector<std::string> ids;
  std::vector<ExampleRecord> records;
  bool any_explicit_id = false;
  std::uint32_t dim = 0;
  std::uint32_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::kParse,
           path + ": line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("embedding") ||
        !obj["embedding"].is_array()) {
      fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                  ": expected object with 'embedding' array");
    }
    const auto& emb = obj["embedding"];
    if (dim == 0) {
      dim = static_cast<std::uint32_t>(emb.size());
    } else if (emb.size() != dim) {
      fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(dim) +
                                  " values, got " + std::to_string(emb.size()));
    }
    for (const auto& v : emb) {
      if (!v.is_number()) {
        fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                    ": non-numeric embedding entry");
      }
      data.push_back(static_cast<float>(v.get<double>()));
    }

    std::string id = std::to_string(rows);
    if (obj.contains("id")) {
      if (!obj["id"].is_string()) {
        fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                    ": 'id' must be a string");
      }
      id = obj["id"].get<std::string>();
      any_explicit_id = true;
    }
    ids.push_back(id);

    if (obj.contains("text")) {
      if (!obj["text"].is_string()) {
        fail(ErrorKind::kParse, path + ": line " + std::to_string(line_no) +
                                    ": 'text' must be a string");
      }
      ExampleRecord rec;
      rec.id = id;
      rec.text = obj["text"].get<std::string>();
      if (obj.contains("label") && obj["label"].is_string()) {
        rec.label = obj["label"].get<std::string>();
      }
      records.push_back(std::move(rec));
    }
    ++rows;
  }
  if (rows == 0) {
    fail(ErrorKind::kValidation, path + ": no embedding rows found");
  }
  if (!any_explicit_id) ids.clear();  // fall back to implicit row-index ids
  return LoadedPool{EmbeddingMatrix(rows, dim, std::move(data), std::move(ids)),
                    std::move(records)};
}

void save_binary(const EmbeddingMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out.write(kMagic, 8);
  write_u32le(out, m.rows());
  write_u32le(out, m.dim());
  for (float v : m.data()) {
    write_u32le(out, std::bit_cast<std::uint32_t>(v));
  }
  if (!out) fail(ErrorKind::kIo, "write failed for '" + path + "'");
}

void save_csv(const EmbeddingMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out << "# d=" << m.dim() << "\n";
  char buf[64];
  for (std::uint32_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::uint32_t j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(row[j]));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) fail(ErrorKind::kIo, "write failed for '" + path + "'");
}

void save_jsonl(const EmbeddingMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  for (std::uint32_t i = 0; i < m.rows(); ++i) {
    nlohmann::json obj;
    obj["id"] = m.id(i);
    nlohmann::json emb = nlohmann::json::array();
    for (float v : m.row(i)) emb.push_back(static_cast<double>(v));
    obj["embedding"] = std::move(emb);
    out << obj.dump() << '\n';
  }
  if (!out) fail(ErrorKind::kIo, "write failed for '" + path + "'");
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::uint32_t rows, std::uint32_t dim,
                                 std::vector<float> data,
                                 std::vector<std::string> ids)
    : rows_(rows), dim_(dim), data_(std::move(data)), ids_(std::move(ids)) {
  if (rows_ == 0 || dim_ == 0) {
    fail(ErrorKind::kValidation,
         "pool must have N >= 1 rows and d >= 1 dimensions");
  }
  if (data_.size() != static_cast<std::size_t>(rows_) * dim_) {
    fail(ErrorKind::kValidation,
         "data size " + std::to_string(data_.size()) + " does not match " +
             std::to_string(rows_) + "x" + std::to_string(dim_));
  }
  for (std::uint32_t i = 0; i < rows_; ++i) {
    double norm_sq = 0.0;
    const float* r = data_.data() + static_cast<std::size_t>(i) * dim_;
    for (std::uint32_t j = 0; j < dim_; ++j) {
      if (!std::isfinite(r[j])) {
        fail(ErrorKind::kValidation, "non-finite value at row " +
                                         std::to_string(i) + " column " +
                                         std::to_string(j));
      }
      norm_sq += static_cast<double>(r[j]) * static_cast<double>(r[j]);
    }
    if (norm_sq <= 0.0) {
      fail(ErrorKind::kValidation, "zero-norm row " + std::to_string(i));
    }
  }
  if (!ids_.empty()) {
    if (ids_.size() != rows_) {
      fail(ErrorKind::kValidation,
           "ids length " + std::to_string(ids_.size()) +
               " does not match row count " + std::to_string(rows_));
    }
    std::unordered_set<std::string> seen;
    for (std::uint32_t i = 0; i < rows_; ++i) {
      if (!seen.insert(ids_[i]).second) {
        fail(ErrorKind::kValidation,
             "duplicate id '" + ids_[i] + "' at row " + std::to_string(i));
      }
    }
  }
}

std::string EmbeddingMatrix::id(std::uint32_t i) const {
  if (i < ids_.size()) return ids_[i];
  return std::to_string(i);
}

EmbeddingMatrix load_embeddings(const std::string& path, FileFormat format) {
  return load_embeddings_with_records(path, format).matrix;
}

LoadedPool load_embeddings_with_records(const std::string& path,
                                        FileFormat format) {
  switch (format) {
    case FileFormat::kBinary:
      return LoadedPool{load_binary(path), {}};
    case FileFormat::kCsv:
      return LoadedPool{load_csv(path), {}};
    case FileFormat::kJsonl:
      return load_jsonl(path);
  }
  fail(ErrorKind::kContract, "unknown file format");
}

void save_embeddings(const EmbeddingMatrix& matrix, const std::string& path,
                     FileFormat format) {
  switch (format) {
    case FileFormat::kBinary:
      return save_binary(matrix, path);
    case FileFormat::kCsv:
      return save_csv(matrix, path);
    case FileFormat::kJsonl:
      return save_jsonl(matrix, path);
  }
  fail(ErrorKind::kContract, "unknown file format");
}

FileFormat parse_format(const std::string& name) {
  if (name == "binary") return FileFormat::kBinary;
  if (name == "csv") return FileFormat::kCsv;
  if (name == "jsonl") return FileFormat::kJsonl;
  throw Error(ErrorKind::kContract,
              "unknown format '" + name + "' (expect binary, csv, or jsonl)");
}

const char* format_name(FileFormat format) {
  switch (format) {
    case FileFormat::kBinary:
      return "binary";
    case FileFormat::kCsv:
      return "csv";
    case FileFormat::kJsonl:
      return "jsonl";
  }
  return "unknown";
}

}  // namespace subsel
