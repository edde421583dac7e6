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
 * Analytic qubit, gate and depth counts for the multiplication circuit.
 *
 * Depth is counted in elementary gates (one- and two-qubit gates and
 * Toffolis). The only multi-controlled stage, W3, has m = 2(n+1) controls;
 * it is expanded as CNOT(B -> BT), C^m X on B, CNOT(B -> BT), with X layers
 * around the polarity-0 controls and C^m X realized by 4(m - 2) Toffolis
 * that borrow m - 2 idle qubits (M1, R1, C2, K1 and BT provide 2n + 3).
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qamp {

struct StageCost {
    std::string name;
    std::size_t gates = 0; ///< Gates as emitted by the circuit builders.
    std::size_t depth = 0; ///< Elementary-gate depth.
};

struct ResourceReport {
    int n = 0;
    bool with_controls = false;
    int qubits = 0;
    int w3_controls = 0;
    std::size_t w3_toffolis = 0;
    std::vector<StageCost> stages; ///< Q3, Q2, Q1, W0, W1, W2, W3, W4.
    std::size_t core_depth = 0;    ///< W0..W4.
    std::size_t total_depth = 0;   ///< Including all three manipulations.
    std::size_t total_gates = 0;
    /// total_depth == depth_slope * n + depth_intercept for every n >= 1.
    std::size_t depth_slope = 0;
    std::size_t depth_intercept = 0;
};

/// Throws ParameterError for n < 1.
ResourceReport resource_report(int n, bool with_controls = false);

} // namespace qamp
