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

#ifndef SUBSEL_ERROR_HPP_
#define SUBSEL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace subsel {

enum class ErrorKind {
  kIo,          // file cannot be opened/read/written
  kParse,       // malformed file content
  kValidation,  // content parsed but violates data invariants
  kContract,    // caller violated an operation precondition
  kRefused,     // request declined by a safety guard
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subsel

#endif  // SUBSEL_ERROR_HPP_
