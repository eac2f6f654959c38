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

#ifndef SUBSEL_PARALLEL_HPP_
#define SUBSEL_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace subsel {

// Worker count: SUBSEL_THREADS env var, where 0 or unset means one thread
// per hardware core.
unsigned thread_cap();

// Runs fn over disjoint chunks [begin, end) covering [0, n). Callers must
// write only to per-index slots so the result is independent of the chunking.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace subsel

#endif  // SUBSEL_PARALLEL_HPP_
