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

#include "qamp/conjugator.hpp"

#include <string>

#include "qamp/errors.hpp"

namespace qamp {

namespace {

void append_register_swap(std::vector<GateSpec> &out, const std::vector<int> &a,
                          const std::vector<int> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("cannot swap registers of different widths");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(gates::swap(a[i], b[i]));
    }
}

Subsystem flag_for(int which) {
    switch (which) {
    case 1:
        return Subsystem::Q1;
    case 2:
        return Subsystem::Q2;
    case 3:
        return Subsystem::Q3;
    default:
        throw ParameterError("manipulation selector must be 1, 2 or 3, got " +
                             std::to_string(which));
    }
}

} // namespace

std::vector<GateSpec> hermitian_conjugate_gates(const EncodedBlock &block) {
    std::vector<GateSpec> out;
    append_register_swap(out, block.r_qubits, block.c_qubits);
    out.push_back(gates::z(block.m_qubit));
    return out;
}

StateVector hermitian_conjugate(StateVector state, const EncodedBlock &block) {
    if (state.num_qubits() != block.width) {
        throw DimensionError("state width does not match the encoded block");
    }
    state.apply(hermitian_conjugate_gates(block));
    return state;
}

std::vector<GateSpec> q_gates(int which, const RegisterLayout &layout) {
    flag_for(which);
    std::vector<GateSpec> out;
    switch (which) {
    case 1:
        append_register_swap(out, layout.qubits(Subsystem::R1), layout.qubits(Subsystem::C1));
        out.push_back(gates::z(layout.qubit(Subsystem::M1)));
        break;
    case 2:
        append_register_swap(out, layout.qubits(Subsystem::R2), layout.qubits(Subsystem::C2));
        out.push_back(gates::z(layout.qubit(Subsystem::M2)));
        break;
    default:
        append_register_swap(out, layout.qubits(Subsystem::R1), layout.qubits(Subsystem::C1));
        append_register_swap(out, layout.qubits(Subsystem::R2), layout.qubits(Subsystem::C2));
        out.push_back(gates::swap(layout.qubit(Subsystem::M1), layout.qubit(Subsystem::M2)));
        break;
    }
    return out;
}

std::vector<GateSpec> q_controlled_gates(int which, const RegisterLayout &layout) {
    const Subsystem flag = flag_for(which);
    if (!layout.control_flags_present()) {
        throw LayoutError("controlled manipulations need a layout with control flags");
    }
    const int control = layout.qubit(flag);
    std::vector<GateSpec> out;
    for (const auto &g : q_gates(which, layout)) {
        out.push_back(g.controlled_by(control));
    }
    return out;
}

StateVector apply_q(StateVector state, int which, const RegisterLayout &layout) {
    state.apply(q_gates(which, layout));
    return state;
}

StateVector apply_q_controlled(StateVector state, int which, const RegisterLayout &layout) {
    state.apply(q_controlled_gates(which, layout));
    return state;
}

} // namespace qamp
