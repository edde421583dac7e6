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
 * Matrix multiplication on amplitude-encoded inputs.
 *
 * Stages, applied to the tensor product of the two encodings:
 *   W0  CNOT(C1_j -> R2_j) for every j; keeps k1 == j2 terms at R2 = 0
 *   W1  H on every C1 qubit; the C1 = 0 component carries the contraction
 *   W2  Z then X on M1 controlled by M2 = 1, H on M2, CNOT(K1 -> K2);
 *       forms real and imaginary parts of the complex products
 *   W3  X on B and BT controlled by C1 = R2 = M2 = K2 = 0
 *   W4  projection onto BT = 1
 *
 * The surviving branch holds G^-1 (b^ |0>_K1 + A^ |1>_K1) on (M1, R1, C2,
 * K1) with probability G^2 / 2^(n+1).
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qamp/complex_matrix.hpp"
#include "qamp/registers.hpp"
#include "qamp/state_vector.hpp"

namespace qamp {

enum class Manipulation { SwapOrder, DaggerSecond, DaggerFirst };

/// Which input manipulations run before W0. Applied as Q3, Q2, Q1.
struct Manipulations {
    bool dagger_first = false;  ///< Q1
    bool dagger_second = false; ///< Q2
    bool swap_order = false;    ///< Q3

    /**
     * Builds the set from an explicit sequence, which must list operators
     * in the order Q3 (SwapOrder), Q2 (DaggerSecond), Q1 (DaggerFirst),
     * each at most once. Other orders throw ParameterError.
     */
    static Manipulations from_sequence(std::span<const Manipulation> sequence);

    /// All eight subsets.
    static std::vector<Manipulations> all();

    /// Short label such as "none", "dagger-a", "swap-order+dagger-a+dagger-b".
    std::string label() const;

    friend bool operator==(const Manipulations &, const Manipulations &) = default;
};

/**
 * The classical matrix the pipeline should produce for a manipulation set,
 * after the transpose applied to swap-order outputs:
 *
 *   none          A1 A2          swap          A2 A1
 *   dagger-a      A1^+ A2        swap+a        conj(A2 A1^+)
 *   dagger-b      A1 A2^+        swap+b        conj(A2^+ A1)
 *   dagger-a+b    A1^+ A2^+      swap+a+b      (A1 A2)^+
 */
ComplexMatrix expected_product(const ComplexMatrix &a1, const ComplexMatrix &a2,
                               const Manipulations &m);

/// The slack product b^ for a manipulation set (b1 b2 up to conjugations).
complex_t expected_slack_product(complex_t b1, complex_t b2, const Manipulations &m);

struct ProductResult {
    ComplexMatrix matrix_hat;  ///< Decoded product on the prepared scale.
    complex_t b_hat;           ///< Decoded slack product.
    double g_exact = 0.0;      ///< Normalization G of the surviving branch.
    double branch_probability = 0.0;
    double oracle_error = 0.0; ///< max |matrix_hat - expected| entrywise.
    double b_error = 0.0;      ///< |b_hat - expected b^|.
    double scale_back = 1.0;   ///< (s1 + c1)(s2 + c2).
    ComplexMatrix expected;    ///< Classical composition for the manipulation set.
    std::size_t worst_row = 0; ///< Entry attaining oracle_error.
    std::size_t worst_col = 0;
    double residual = 0.0;     ///< Weight outside the product encoding after W4.
    Manipulations manipulations;
    bool controlled = false;

    /// The product of the original (unprepared) matrices.
    ComplexMatrix recovered() const { return matrix_hat.scaled(scale_back); }
    complex_t recovered_b() const { return b_hat * scale_back; }
};

std::vector<GateSpec> w0_gates(const RegisterLayout &layout);
std::vector<GateSpec> w1_gates(const RegisterLayout &layout);
std::vector<GateSpec> w2_gates(const RegisterLayout &layout);
std::vector<GateSpec> w3_gates(const RegisterLayout &layout);

/// Q3, Q2, Q1 gates for the active manipulations. With `controlled`, all
/// three controlled operators are emitted and the flags select them.
std::vector<GateSpec> manipulation_gates(const Manipulations &m, const RegisterLayout &layout,
                                         bool controlled);

/// |Phi0> = |Psi2> (x) |Psi1> laid out over the full register.
StateVector build_initial(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                          const RegisterLayout &layout);

StateVector apply_w0(StateVector state, const RegisterLayout &layout);
StateVector apply_w1(StateVector state, const RegisterLayout &layout);
StateVector apply_w2(StateVector state, const RegisterLayout &layout);

/// Throws ValidationError when B or BT is not |0> before the stage.
StateVector apply_w3(StateVector state, const RegisterLayout &layout);

/// Projects onto BT = 1. Throws MeasurementError if that branch is empty.
Projection conditional_measure(const StateVector &state, const RegisterLayout &layout);

struct PipelineOptions {
    /// Drive the manipulations through flag-controlled operators; the
    /// layout must carry control flags.
    bool controlled = false;
};

struct PipelineRun {
    ProductResult result;
    StateVector output; ///< Post-measurement state.
};

PipelineRun run_pipeline_with_state(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                                    const Manipulations &m, const RegisterLayout &layout,
                                    const PipelineOptions &options = {});

ProductResult run_pipeline(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                           const Manipulations &m, const RegisterLayout &layout,
                           const PipelineOptions &options = {});

} // namespace qamp
