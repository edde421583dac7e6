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
 * Amplitude encoding of a prepared matrix over four subsystems:
 *
 *   (b0|0>_M + b1|1>_M) |0>_R |0>_C |0>_K
 *     + sum_jk (a~_jk0 |0>_M + a~_jk1 |1>_M) |j>_R |k>_C |1>_K
 *
 * M labels real (0) and imaginary (1) parts, K separates the slack term
 * from the matrix entries.
 */
#pragma once

#include <array>
#include <vector>

#include "qamp/complex_matrix.hpp"
#include "qamp/registers.hpp"
#include "qamp/state_vector.hpp"

namespace qamp {

enum class Side { First, Second };

/**
 * Where an encoded matrix lives inside a statevector.
 *
 * A block names one M qubit, the R and C registers, one K qubit, and the
 * fixed values every other qubit must hold ("rest"). Local indices use the
 * standalone order: M at bit 0, R at bits 1..n, C at bits n+1..2n, K at
 * bit 2n+1.
 */
struct EncodedBlock {
    int n = 0;
    int width = 0; ///< Qubit count of the states this block addresses.
    int m_qubit = 0;
    std::vector<int> r_qubits;
    std::vector<int> c_qubits;
    int k_qubit = 0;
    index_t rest_mask = 0;
    index_t rest_value = 0;

    /// A matrix alone on 2n + 2 qubits in the local order.
    static EncodedBlock standalone(int n);

    /// (M_i, R_i, C_i, K_i) of the given side inside the full layout;
    /// everything else is expected in |0>.
    static EncodedBlock for_side(const RegisterLayout &layout, Side side);

    /**
     * The product register (M1, R1, C2, K1) after the conditional
     * measurement: M2, C1, R2, K2 hold 0, B and BT hold 1, and the control
     * flags (if allocated) hold `flags`.
     */
    static EncodedBlock product_output(const RegisterLayout &layout,
                                       std::array<int, 3> flags = {0, 0, 0});

    /// Full index of a local index, with the rest bits filled in.
    index_t scatter(index_t local) const;

    /// Local index of a full index (rest bits ignored).
    index_t gather(index_t full) const;

    int local_width() const noexcept { return 2 * n + 2; }
};

/// Standalone encoding on 2n + 2 qubits.
StateVector encode(const PreparedMatrix &pm);

/// Encoding placed into `block`; throws ValidationError on a norm defect.
StateVector encode(const PreparedMatrix &pm, const EncodedBlock &block);

struct DecodedBlock {
    ComplexMatrix matrix;
    complex_t b;
    double residual; ///< Squared weight outside the encoding support.
};

/// Reads the matrix and slack back out; never fails on malformed states.
DecodedBlock decode(const StateVector &state, const EncodedBlock &block);

} // namespace qamp
