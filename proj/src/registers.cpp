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

#include "qamp/registers.hpp"

#include <string>

#include "qamp/errors.hpp"
#include "qamp/state_vector.hpp"

namespace qamp {

namespace {

constexpr std::array<std::string_view, kSubsystemCount> kNames = {
    "M1", "M2", "R1", "C1", "R2", "C2", "K1", "K2", "B", "BT", "Q1", "Q2", "Q3"};

std::size_t slot(Subsystem s) { return static_cast<std::size_t>(s); }

bool is_wide(Subsystem s) {
    return s == Subsystem::R1 || s == Subsystem::C1 || s == Subsystem::R2 ||
           s == Subsystem::C2;
}

bool is_control_flag(Subsystem s) {
    return s == Subsystem::Q1 || s == Subsystem::Q2 || s == Subsystem::Q3;
}

} // namespace

std::string_view subsystem_name(Subsystem s) { return kNames[slot(s)]; }

Subsystem subsystem_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return kAllSubsystems[i];
        }
    }
    throw LayoutError("unknown subsystem '" + std::string(name) + "'");
}

bool RegisterLayout::has(Subsystem s) const noexcept { return slices_[slot(s)].has_value(); }

Slice RegisterLayout::slice(Subsystem s) const {
    if (!has(s)) {
        throw LayoutError("subsystem " + std::string(subsystem_name(s)) +
                          " is not allocated in this layout");
    }
    return *slices_[slot(s)];
}

std::vector<int> RegisterLayout::qubits(Subsystem s) const {
    const Slice sl = slice(s);
    std::vector<int> out(sl.width);
    for (int i = 0; i < sl.width; ++i) {
        out[i] = sl.first + i;
    }
    return out;
}

int RegisterLayout::qubit(Subsystem s) const {
    const Slice sl = slice(s);
    if (sl.width != 1) {
        throw LayoutError("subsystem " + std::string(subsystem_name(s)) +
                          " is wider than one qubit");
    }
    return sl.first;
}

RegisterLayout layout_for(int n, bool with_controls) {
    if (n < 1) {
        throw LayoutError("register width n must be at least 1, got " + std::to_string(n));
    }
    const int total = 4 * n + 6 + (with_controls ? 3 : 0);
    if (total > kMaxQubits) {
        throw LayoutError("layout for n = " + std::to_string(n) + " needs " +
                          std::to_string(total) + " qubits; the engine supports " +
                          std::to_string(kMaxQubits));
    }
    RegisterLayout layout;
    layout.n_ = n;
    layout.with_controls_ = with_controls;
    int next = 0;
    for (Subsystem s : kAllSubsystems) {
        if (is_control_flag(s) && !with_controls) {
            continue;
        }
        const int width = is_wide(s) ? n : 1;
        layout.slices_[slot(s)] = Slice{next, width};
        next += width;
    }
    layout.total_ = next;
    return layout;
}

std::uint64_t basis_index(const RegisterLayout &layout, const Assignment &assignment) {
    std::uint64_t index = 0;
    for (const auto &[s, value] : assignment) {
        const Slice sl = layout.slice(s);
        if (value >> sl.width) {
            throw LayoutError("value " + std::to_string(value) + " does not fit in " +
                              std::to_string(sl.width) + "-qubit subsystem " +
                              std::string(subsystem_name(s)));
        }
        index |= value << sl.first;
    }
    return index;
}

} // namespace qamp
