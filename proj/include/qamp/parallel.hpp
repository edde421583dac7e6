// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qamp {

/// Worker count from QAMP_THREADS (0 or unset = hardware concurrency).
unsigned thread_count();

/// Below this many iterations, loops always run on the calling thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 16;

/**
 * Calls body(begin, end) on contiguous chunks covering [0, count).
 *
 * Chunks are disjoint, so bodies that only write to locations derived from
 * their own indices give results identical to a sequential loop.
 */
template <typename Body> void parallel_for(std::size_t count, Body &&body) {
    const unsigned workers = thread_count();
    if (workers <= 1 || count < kParallelThreshold) {
        body(std::size_t{0}, count);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, count);
    const std::size_t step = (count + chunks - 1) / chunks;
    std::vector<std::jthread> pool;
    pool.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
        const std::size_t begin = c * step;
        const std::size_t end = std::min(count, begin + step);
        if (begin < end) {
            pool.emplace_back([&body, begin, end] { body(begin, end); });
        }
    }
    body(std::size_t{0}, std::min(count, step));
}

} // namespace qamp
