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

#include "qamp/encoder.hpp"

#include <string>

#include "qamp/errors.hpp"

namespace qamp {

namespace {

index_t bit(int q) { return index_t{1} << q; }

index_t block_mask(const EncodedBlock &block) {
    index_t mask = bit(block.m_qubit) | bit(block.k_qubit);
    for (int q : block.r_qubits) {
        mask |= bit(q);
    }
    for (int q : block.c_qubits) {
        mask |= bit(q);
    }
    return mask;
}

EncodedBlock from_layout(const RegisterLayout &layout, Subsystem m, Subsystem r,
                         Subsystem c, Subsystem k) {
    EncodedBlock block;
    block.n = layout.n();
    block.width = layout.total_qubits();
    block.m_qubit = layout.qubit(m);
    block.r_qubits = layout.qubits(r);
    block.c_qubits = layout.qubits(c);
    block.k_qubit = layout.qubit(k);
    const index_t all = (index_t{1} << block.width) - 1;
    block.rest_mask = all & ~block_mask(block);
    block.rest_value = 0;
    return block;
}

} // namespace

EncodedBlock EncodedBlock::standalone(int n) {
    if (n < 0) {
        throw DimensionError("matrix register width must be nonnegative");
    }
    EncodedBlock block;
    block.n = n;
    block.width = 2 * n + 2;
    block.m_qubit = 0;
    for (int i = 0; i < n; ++i) {
        block.r_qubits.push_back(1 + i);
        block.c_qubits.push_back(1 + n + i);
    }
    block.k_qubit = 2 * n + 1;
    return block;
}

EncodedBlock EncodedBlock::for_side(const RegisterLayout &layout, Side side) {
    if (side == Side::First) {
        return from_layout(layout, Subsystem::M1, Subsystem::R1, Subsystem::C1, Subsystem::K1);
    }
    return from_layout(layout, Subsystem::M2, Subsystem::R2, Subsystem::C2, Subsystem::K2);
}

EncodedBlock EncodedBlock::product_output(const RegisterLayout &layout,
                                          std::array<int, 3> flags) {
    EncodedBlock block =
        from_layout(layout, Subsystem::M1, Subsystem::R1, Subsystem::C2, Subsystem::K1);
    block.rest_value = bit(layout.qubit(Subsystem::B)) | bit(layout.qubit(Subsystem::BT));
    if (layout.control_flags_present()) {
        const std::array<Subsystem, 3> qs = {Subsystem::Q1, Subsystem::Q2, Subsystem::Q3};
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (flags[i]) {
                block.rest_value |= bit(layout.qubit(qs[i]));
            }
        }
    }
    return block;
}

index_t EncodedBlock::scatter(index_t local) const {
    index_t full = rest_value;
    if (local & 1) {
        full |= bit(m_qubit);
    }
    for (int i = 0; i < n; ++i) {
        if ((local >> (1 + i)) & 1) {
            full |= bit(r_qubits[i]);
        }
        if ((local >> (1 + n + i)) & 1) {
            full |= bit(c_qubits[i]);
        }
    }
    if ((local >> (2 * n + 1)) & 1) {
        full |= bit(k_qubit);
    }
    return full;
}

index_t EncodedBlock::gather(index_t full) const {
    index_t local = (full >> m_qubit) & 1;
    for (int i = 0; i < n; ++i) {
        local |= ((full >> r_qubits[i]) & 1) << (1 + i);
        local |= ((full >> c_qubits[i]) & 1) << (1 + n + i);
    }
    local |= ((full >> k_qubit) & 1) << (2 * n + 1);
    return local;
}

StateVector encode(const PreparedMatrix &pm) {
    return encode(pm, EncodedBlock::standalone(pm.n()));
}

StateVector encode(const PreparedMatrix &pm, const EncodedBlock &block) {
    if (pm.n() != block.n) {
        throw DimensionError("prepared matrix has n = " + std::to_string(pm.n()) +
                             " but the block expects n = " + std::to_string(block.n));
    }
    const ComplexMatrix &a = pm.matrix();
    const index_t dim = a.dim();
    const index_t k_local = index_t{1} << (2 * block.n + 1);
    std::vector<complex_t> amps(index_t{1} << block.width);

    amps[block.scatter(0)] = pm.b().real();
    amps[block.scatter(1)] = pm.b().imag();
    for (index_t j = 0; j < dim; ++j) {
        for (index_t k = 0; k < dim; ++k) {
            const index_t local = k_local | (k << (1 + block.n)) | (j << 1);
            amps[block.scatter(local)] = a(j, k).real();
            amps[block.scatter(local | 1)] = a(j, k).imag();
        }
    }
    try {
        return StateVector::from_amplitudes(std::move(amps));
    } catch (const ValidationError &e) {
        throw ValidationError(std::string("encoded state is not normalized: ") + e.what());
    }
}

DecodedBlock decode(const StateVector &state, const EncodedBlock &block) {
    if (state.num_qubits() != block.width) {
        throw DimensionError("state has " + std::to_string(state.num_qubits()) +
                             " qubits but the block addresses " + std::to_string(block.width));
    }
    const int n = block.n;
    const index_t k_local = index_t{1} << (2 * n + 1);
    const index_t dim_mask = (index_t{1} << n) - 1;

    DecodedBlock out{ComplexMatrix(n), complex_t{}, 0.0};
    const complex_t imag_unit{0.0, 1.0};
    for (index_t i = 0; i < state.size(); ++i) {
        const complex_t amp = state[i];
        if (amp == complex_t{}) {
            continue;
        }
        if ((i & block.rest_mask) != block.rest_value) {
            out.residual += std::norm(amp);
            continue;
        }
        const index_t local = block.gather(i);
        const complex_t part = (local & 1) ? imag_unit * amp : amp;
        const index_t row = (local >> 1) & dim_mask;
        const index_t col = (local >> (1 + n)) & dim_mask;
        if (local & k_local) {
            out.matrix(row, col) += part;
        } else if (row == 0 && col == 0) {
            out.b += part;
        } else {
            out.residual += std::norm(amp);
        }
    }
    return out;
}

} // namespace qamp
