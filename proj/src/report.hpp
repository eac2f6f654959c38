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

#ifndef SUBSEL_REPORT_HPP_
#define SUBSEL_REPORT_HPP_

#include <string>

#include "selection.hpp"

namespace subsel {

// Writes the selection report as compact JSON. Numeric fields round-trip
// bit-exactly through load_selection. Timing fields carry -1 when a stage
// was not measured.
void save_selection(const SelectionResult& result, const std::string& path);
SelectionResult load_selection(const std::string& path);

// One-line hardware note for report environments, e.g. "8 hardware threads".
std::string default_environment_note();

}  // namespace subsel

#endif  // SUBSEL_REPORT_HPP_
