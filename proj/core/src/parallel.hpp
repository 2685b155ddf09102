// Copyright 2026 The bosim Authors
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

#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bosim::detail {

/// Calls body(begin, end, worker) on `workers` contiguous blocks of
/// [0, count). Block boundaries depend only on (count, workers). The first
/// exception thrown by any worker is rethrown after all of them join.
template <class Body>
void parallel_blocks(std::size_t count, int workers, Body&& body) {
  if (workers < 1) workers = 1;
  const auto w = static_cast<std::size_t>(workers);
  auto bound = [&](std::size_t b) { return count * b / w; };
  if (w == 1 || count < 2) {
    body(std::size_t{0}, count, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> pool;
  pool.reserve(w - 1);
  for (std::size_t b = 1; b < w; ++b) {
    pool.emplace_back([&, b] {
      try {
        body(bound(b), bound(b + 1), static_cast<int>(b));
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  try {
    body(bound(0), bound(1), 0);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace bosim::detail
