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
 * Hermitian conjugation of an encoded matrix and the input manipulations
 * of the multiplication circuit.
 *
 * Conjugation is SWAP(R, C) followed by Z on M: the swap transposes, the
 * phase flip on the imaginary label conjugates.
 */
#pragma once

#include <vector>

#include "qamp/encoder.hpp"
#include "qamp/registers.hpp"
#include "qamp/state_vector.hpp"

namespace qamp {

/// Gates of SWAP_RC * Z_M for an encoded block.
std::vector<GateSpec> hermitian_conjugate_gates(const EncodedBlock &block);

StateVector hermitian_conjugate(StateVector state, const EncodedBlock &block);

/**
 * Input manipulations:
 *   Q1 = SWAP(R1, C1) Z(M1)                      dagger of the first matrix
 *   Q2 = SWAP(R2, C2) Z(M2)                      dagger of the second matrix
 *   Q3 = SWAP(R1, C1) SWAP(R2, C2) SWAP(M1, M2)  exchange of the factors
 *
 * Throws ParameterError for `which` outside {1, 2, 3}.
 */
std::vector<GateSpec> q_gates(int which, const RegisterLayout &layout);

/// q_gates with every gate additionally controlled on flag qubit Q<which>.
/// Throws LayoutError when the layout has no control flags.
std::vector<GateSpec> q_controlled_gates(int which, const RegisterLayout &layout);

StateVector apply_q(StateVector state, int which, const RegisterLayout &layout);

StateVector apply_q_controlled(StateVector state, int which, const RegisterLayout &layout);

} // namespace qamp
