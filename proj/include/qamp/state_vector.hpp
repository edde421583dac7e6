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
 * Dense statevector engine. Qubit 0 is the least significant bit of an
 * amplitude index.
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qamp/complex_matrix.hpp"

namespace qamp {

using index_t = std::uint64_t;

inline constexpr int kMaxQubits = 30;

/// Tolerance on the unit norm of states built from raw amplitudes.
inline constexpr double kStateNormTolerance = 1e-10;

enum class GateKind { X, Z, H, SWAP, CNOT, MULTI_CONTROLLED };

struct Control {
    int qubit;
    int polarity = 1; ///< Gate acts where the control bit equals this value.

    friend bool operator==(const Control &, const Control &) = default;
};

/**
 * A gate plus its control list.
 *
 * X, Z and H act on one target. CNOT is X with exactly one control.
 * SWAP exchanges two targets. MULTI_CONTROLLED flips every target (X on
 * each) and is how projector-controlled operators are expressed: a
 * polarity-0 control selects the |0> branch of that qubit.
 *
 * Any kind may carry extra controls.
 */
struct GateSpec {
    GateKind kind;
    std::vector<int> targets;
    std::vector<Control> controls;

    /// Copy with one more control appended.
    GateSpec controlled_by(int qubit, int polarity = 1) const;
};

namespace gates {
GateSpec x(int q);
GateSpec z(int q);
GateSpec h(int q);
GateSpec swap(int a, int b);
GateSpec cnot(int control, int target);
GateSpec mcx(std::vector<int> targets, std::vector<Control> controls);
} // namespace gates

struct Projection;

class StateVector {
  public:
    /// |0...0> on num_qubits qubits.
    explicit StateVector(int num_qubits = 0);

    /// Validates the length (a power of two) and unit norm within 1e-10.
    static StateVector from_amplitudes(std::vector<complex_t> amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    index_t size() const noexcept { return index_t{1} << num_qubits_; }

    std::span<const complex_t> amplitudes() const noexcept { return amps_; }
    complex_t operator[](index_t i) const { return amps_[i]; }

    double norm_squared() const noexcept;

    /// Squared weight of the indices with (i & mask) == value.
    double subspace_weight(index_t mask, index_t value) const noexcept;

    /// Marginal probability that `qubit` reads `outcome`.
    double probability(int qubit, int outcome) const;

    /// In-place gate application; throws GateError for a malformed spec.
    void apply(const GateSpec &gate);
    void apply(std::span<const GateSpec> sequence);

  private:
    friend StateVector tensor(const StateVector &, const StateVector &);
    friend Projection project_and_renormalize(const StateVector &, int, int);

    StateVector(int num_qubits, std::vector<complex_t> amplitudes);

    int num_qubits_;
    std::vector<complex_t> amps_;
};

/// Computational basis state; basis_index bit q is the value of qubit q.
StateVector init_basis(int num_qubits, index_t basis_index);

/// Returns the updated copy; the input is left untouched.
StateVector apply_gate(StateVector state, const GateSpec &gate);

/// state_a (x) state_b, with state_b on the low-order qubits.
StateVector tensor(const StateVector &state_a, const StateVector &state_b);

struct Projection {
    StateVector state;
    double probability; ///< Weight of the outcome before projection.
};

/// Throws MeasurementError when the outcome has zero weight.
Projection project_and_renormalize(const StateVector &state, int qubit, int outcome);

/**
 * Shot counts for measuring `qubit`, drawn as a binomial from the exact
 * marginal. Identical for identical (state, qubit, seed, shots).
 */
std::array<std::uint64_t, 2> sample_measure(const StateVector &state, int qubit,
                                            std::uint64_t rng_seed, std::uint64_t shots);

/**
 * Number of successes in `shots` Bernoulli(p) trials.
 *
 * Shots are split into fixed-size shards, each with its own generator seeded
 * from (seed, shard index); shards run in parallel and the sum does not
 * depend on the thread count.
 */
std::uint64_t sample_binomial(double p, std::uint64_t shots, std::uint64_t seed);

} // namespace qamp
