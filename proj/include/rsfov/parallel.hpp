// Copyright 2026 The rsfov Authors
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

#ifndef RSFOV__PARALLEL_HPP_
#define RSFOV__PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rsfov
{

/// \brief Effective worker count: `requested` (0 = hardware concurrency), capped by the
/// RSFOV_MAX_JOBS environment variable when it holds a positive integer.
inline unsigned resolve_jobs(unsigned requested)
{
  unsigned jobs = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char * cap = std::getenv("RSFOV_MAX_JOBS")) {
    char * end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0) {
      jobs = std::min(jobs, static_cast<unsigned>(v));
    }
  }
  return std::max(1u, jobs);
}

/// \brief Run fn(i) for i in [0, count) on up to `jobs` threads.
///
/// Work items are claimed from a shared counter; results must be written by index.
/// The first exception thrown by any item is rethrown after all workers stop.
template<typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn && fn)
{
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, count))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed = true;
        }
      }
    };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back(worker);
  }
  for (auto & t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace rsfov

#endif  // RSFOV__PARALLEL_HPP_
