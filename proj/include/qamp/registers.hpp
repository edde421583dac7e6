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

/**
 * @file
 * Named subsystems of the multiplication circuit and their qubit slices.
 *
 * Order from qubit 0 upward: M1, M2, R1, C1, R2, C2, K1, K2, B, BT and,
 * when control flags are requested, Q1, Q2, Q3. R and C registers are n
 * qubits wide (little-endian within the slice); every other subsystem is a
 * single qubit.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace qamp {

enum class Subsystem { M1, M2, R1, C1, R2, C2, K1, K2, B, BT, Q1, Q2, Q3 };

inline constexpr std::size_t kSubsystemCount = 13;

inline constexpr std::array<Subsystem, kSubsystemCount> kAllSubsystems = {
    Subsystem::M1, Subsystem::M2, Subsystem::R1, Subsystem::C1, Subsystem::R2,
    Subsystem::C2, Subsystem::K1, Subsystem::K2, Subsystem::B,  Subsystem::BT,
    Subsystem::Q1, Subsystem::Q2, Subsystem::Q3};

std::string_view subsystem_name(Subsystem s);

/// Inverse of subsystem_name; throws LayoutError for unknown names.
Subsystem subsystem_from_name(std::string_view name);

struct Slice {
    int first;
    int width;

    std::uint64_t mask() const noexcept {
        return ((std::uint64_t{1} << width) - 1) << first;
    }
};

class RegisterLayout {
  public:
    int n() const noexcept { return n_; }
    bool control_flags_present() const noexcept { return with_controls_; }
    int total_qubits() const noexcept { return total_; }

    bool has(Subsystem s) const noexcept;

    /// Throws LayoutError when the subsystem is not allocated.
    Slice slice(Subsystem s) const;

    /// Qubit indices of a slice, least significant first.
    std::vector<int> qubits(Subsystem s) const;

    /// The single qubit of a one-qubit subsystem.
    int qubit(Subsystem s) const;

  private:
    friend RegisterLayout layout_for(int n, bool with_controls);

    int n_ = 0;
    bool with_controls_ = false;
    int total_ = 0;
    std::array<std::optional<Slice>, kSubsystemCount> slices_{};
};

/// Throws LayoutError for n < 1 or layouts wider than the engine supports.
RegisterLayout layout_for(int n, bool with_controls = false);

using Assignment = std::map<Subsystem, std::uint64_t>;

/// Amplitude index with each value placed in its slice; missing names are 0.
std::uint64_t basis_index(const RegisterLayout &layout, const Assignment &assignment);

} // namespace qamp
