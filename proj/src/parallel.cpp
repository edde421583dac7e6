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

#include "qamp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qamp {

unsigned thread_count() {
    unsigned requested = 0;
    if (const char *env = std::getenv("QAMP_THREADS"); env != nullptr && *env != '\0') {
        try {
            const long value = std::stol(env);
            requested = value > 0 ? static_cast<unsigned>(value) : 0;
        } catch (const std::exception &) {
            requested = 0;
        }
    }
    if (requested == 0) {
        requested = std::max(1u, std::thread::hardware_concurrency());
    }
    return requested;
}

} // namespace qamp
