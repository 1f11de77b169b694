// Copyright 2026 The spanscore Authors
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

#ifndef SPANSCORE_PARALLEL_HPP
#define SPANSCORE_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace spanscore {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
// written to index i of a preallocated buffer inside fn, so the reduction
// order — and therefore every output byte — is independent of the worker
// count. The first exception in index order is rethrown.
template <typename Fn>
void parallel_for(size_t n, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  const size_t thread_count =
      std::min<size_t>(static_cast<size_t>(workers), n ? n : 1);
  if (thread_count <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto body = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (size_t t = 0; t < thread_count; ++t) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace spanscore

#endif  // SPANSCORE_PARALLEL_HPP
