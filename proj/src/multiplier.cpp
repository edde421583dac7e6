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

#include "qamp/multiplier.hpp"

#include <cmath>
#include <string>

#include "qamp/conjugator.hpp"
#include "qamp/encoder.hpp"
#include "qamp/errors.hpp"

namespace qamp {

namespace {

constexpr double kAncillaTolerance = 1e-12;

index_t bit(int q) { return index_t{1} << q; }

} // namespace

Manipulations Manipulations::from_sequence(std::span<const Manipulation> sequence) {
    Manipulations m;
    int last = -1;
    for (Manipulation op : sequence) {
        const int rank = static_cast<int>(op);
        if (rank <= last) {
            throw ParameterError(
                "manipulations must be applied in the order swap-order, dagger-b, dagger-a, "
                "each at most once");
        }
        last = rank;
        switch (op) {
        case Manipulation::SwapOrder:
            m.swap_order = true;
            break;
        case Manipulation::DaggerSecond:
            m.dagger_second = true;
            break;
        case Manipulation::DaggerFirst:
            m.dagger_first = true;
            break;
        }
    }
    return m;
}

std::vector<Manipulations> Manipulations::all() {
    std::vector<Manipulations> out;
    for (int mask = 0; mask < 8; ++mask) {
        out.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
    }
    return out;
}

std::string Manipulations::label() const {
    std::string out;
    auto add = [&out](const char *part) {
        if (!out.empty()) {
            out += '+';
        }
        out += part;
    };
    if (swap_order) {
        add("swap-order");
    }
    if (dagger_first) {
        add("dagger-a");
    }
    if (dagger_second) {
        add("dagger-b");
    }
    return out.empty() ? "none" : out;
}

ComplexMatrix expected_product(const ComplexMatrix &a1, const ComplexMatrix &a2,
                               const Manipulations &m) {
    if (!m.swap_order) {
        const ComplexMatrix left = m.dagger_first ? dagger_oracle(a1) : a1;
        const ComplexMatrix right = m.dagger_second ? dagger_oracle(a2) : a2;
        return matmul_oracle(left, right);
    }
    if (m.dagger_first && m.dagger_second) {
        return dagger_oracle(matmul_oracle(a1, a2));
    }
    if (m.dagger_first) {
        return matmul_oracle(a2, dagger_oracle(a1)).conj();
    }
    if (m.dagger_second) {
        return matmul_oracle(dagger_oracle(a2), a1).conj();
    }
    return matmul_oracle(a2, a1);
}

complex_t expected_slack_product(complex_t b1, complex_t b2, const Manipulations &m) {
    // Q1 conjugates whatever M1 labels and Q2 whatever M2 labels; after Q3
    // M1 labels the second input and M2 the first.
    const bool conj_first = m.swap_order ? m.dagger_second : m.dagger_first;
    const bool conj_second = m.swap_order ? m.dagger_first : m.dagger_second;
    return (conj_first ? std::conj(b1) : b1) * (conj_second ? std::conj(b2) : b2);
}

std::vector<GateSpec> w0_gates(const RegisterLayout &layout) {
    const auto c1 = layout.qubits(Subsystem::C1);
    const auto r2 = layout.qubits(Subsystem::R2);
    std::vector<GateSpec> out;
    for (std::size_t j = 0; j < c1.size(); ++j) {
        out.push_back(gates::cnot(c1[j], r2[j]));
    }
    return out;
}

std::vector<GateSpec> w1_gates(const RegisterLayout &layout) {
    std::vector<GateSpec> out;
    for (int q : layout.qubits(Subsystem::C1)) {
        out.push_back(gates::h(q));
    }
    return out;
}

std::vector<GateSpec> w2_gates(const RegisterLayout &layout) {
    const int m1 = layout.qubit(Subsystem::M1);
    const int m2 = layout.qubit(Subsystem::M2);
    // sigma_x sigma_z on M1 when M2 = 1: Z acts first, then X.
    return {gates::z(m1).controlled_by(m2), gates::x(m1).controlled_by(m2), gates::h(m2),
            gates::cnot(layout.qubit(Subsystem::K1), layout.qubit(Subsystem::K2))};
}

std::vector<GateSpec> w3_gates(const RegisterLayout &layout) {
    std::vector<Control> controls;
    for (Subsystem s : {Subsystem::C1, Subsystem::R2, Subsystem::M2, Subsystem::K2}) {
        for (int q : layout.qubits(s)) {
            controls.push_back({q, 0});
        }
    }
    return {gates::mcx({layout.qubit(Subsystem::B), layout.qubit(Subsystem::BT)},
                       std::move(controls))};
}

std::vector<GateSpec> manipulation_gates(const Manipulations &m, const RegisterLayout &layout,
                                         bool controlled) {
    std::vector<GateSpec> out;
    auto append = [&](int which, bool active) {
        if (controlled) {
            const auto gs = q_controlled_gates(which, layout);
            out.insert(out.end(), gs.begin(), gs.end());
        } else if (active) {
            const auto gs = q_gates(which, layout);
            out.insert(out.end(), gs.begin(), gs.end());
        }
    };
    append(3, m.swap_order);
    append(2, m.dagger_second);
    append(1, m.dagger_first);
    return out;
}

StateVector build_initial(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                          const RegisterLayout &layout) {
    if (pm1.n() != pm2.n() || pm1.n() != layout.n()) {
        throw DimensionError("inputs have n = " + std::to_string(pm1.n()) + " and " +
                             std::to_string(pm2.n()) + ", layout expects " +
                             std::to_string(layout.n()));
    }
    const StateVector psi1 = encode(pm1);
    const StateVector psi2 = encode(pm2);
    const EncodedBlock first = EncodedBlock::for_side(layout, Side::First);
    const EncodedBlock second = EncodedBlock::for_side(layout, Side::Second);

    std::vector<index_t> support1;
    std::vector<index_t> support2;
    for (index_t i = 0; i < psi1.size(); ++i) {
        if (psi1[i] != complex_t{}) {
            support1.push_back(i);
        }
        if (psi2[i] != complex_t{}) {
            support2.push_back(i);
        }
    }

    std::vector<complex_t> amps(index_t{1} << layout.total_qubits());
    for (index_t i1 : support1) {
        const index_t base = first.scatter(i1);
        for (index_t i2 : support2) {
            amps[base | second.scatter(i2)] = psi1[i1] * psi2[i2];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector apply_w0(StateVector state, const RegisterLayout &layout) {
    state.apply(w0_gates(layout));
    return state;
}

StateVector apply_w1(StateVector state, const RegisterLayout &layout) {
    state.apply(w1_gates(layout));
    return state;
}

StateVector apply_w2(StateVector state, const RegisterLayout &layout) {
    state.apply(w2_gates(layout));
    return state;
}

StateVector apply_w3(StateVector state, const RegisterLayout &layout) {
    const index_t ancillas = bit(layout.qubit(Subsystem::B)) | bit(layout.qubit(Subsystem::BT));
    if (std::abs(state.subspace_weight(ancillas, 0) - state.norm_squared()) >
        kAncillaTolerance) {
        throw ValidationError("ancillas B and BT must start in |0>");
    }
    state.apply(w3_gates(layout));
    return state;
}

Projection conditional_measure(const StateVector &state, const RegisterLayout &layout) {
    const int b = layout.qubit(Subsystem::B);
    const int bt = layout.qubit(Subsystem::BT);
    // BT = 1 exactly when B = 1, so projecting BT selects the flagged branch.
    const double mismatch = state.subspace_weight(bit(b) | bit(bt), bit(bt)) +
                            state.subspace_weight(bit(b) | bit(bt), bit(b));
    if (mismatch > kAncillaTolerance) {
        throw ValidationError("ancillas B and BT are not correlated before measurement");
    }
    return project_and_renormalize(state, bt, 1);
}

PipelineRun run_pipeline_with_state(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                                    const Manipulations &m, const RegisterLayout &layout,
                                    const PipelineOptions &options) {
    if (options.controlled && !layout.control_flags_present()) {
        throw LayoutError("controlled manipulations need a layout with control flags");
    }
    StateVector state = build_initial(pm1, pm2, layout);

    std::array<int, 3> flags = {0, 0, 0};
    if (options.controlled) {
        flags = {m.dagger_first ? 1 : 0, m.dagger_second ? 1 : 0, m.swap_order ? 1 : 0};
        const std::array<Subsystem, 3> qs = {Subsystem::Q1, Subsystem::Q2, Subsystem::Q3};
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (flags[i]) {
                state.apply(gates::x(layout.qubit(qs[i])));
            }
        }
    }
    state.apply(manipulation_gates(m, layout, options.controlled));

    state = apply_w0(std::move(state), layout);
    state = apply_w1(std::move(state), layout);
    state = apply_w2(std::move(state), layout);
    state = apply_w3(std::move(state), layout);
    Projection measured = conditional_measure(state, layout);

    const DecodedBlock decoded =
        decode(measured.state, EncodedBlock::product_output(layout, flags));

    ProductResult r;
    r.manipulations = m;
    r.controlled = options.controlled;
    r.branch_probability = measured.probability;
    r.g_exact = std::sqrt(measured.probability * std::ldexp(1.0, layout.n() + 1));
    r.residual = decoded.residual;
    r.matrix_hat = decoded.matrix.scaled(r.g_exact);
    if (m.swap_order) {
        r.matrix_hat = r.matrix_hat.transpose();
    }
    r.b_hat = decoded.b * r.g_exact;
    r.scale_back = pm1.scale() * pm2.scale();

    r.expected = expected_product(pm1.matrix(), pm2.matrix(), m);
    r.b_error = std::abs(r.b_hat - expected_slack_product(pm1.b(), pm2.b(), m));
    const std::size_t dim = r.expected.dim();
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            const double err = std::abs(r.matrix_hat(j, k) - r.expected(j, k));
            if (err > r.oracle_error) {
                r.oracle_error = err;
                r.worst_row = j;
                r.worst_col = k;
            }
        }
    }
    return {std::move(r), std::move(measured.state)};
}

ProductResult run_pipeline(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                           const Manipulations &m, const RegisterLayout &layout,
                           const PipelineOptions &options) {
    return run_pipeline_with_state(pm1, pm2, m, layout, options).result;
}

} // namespace qamp
