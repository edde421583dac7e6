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

#include "qamp/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "qamp/errors.hpp"
#include "qamp/parallel.hpp"

namespace qamp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::uint64_t kShardShots = std::uint64_t{1} << 16;

void check_width(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw DimensionError("state width " + std::to_string(num_qubits) + " outside [0, " +
                             std::to_string(kMaxQubits) + "]");
    }
}

void check_qubit(int qubit, int num_qubits) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw GateError("qubit " + std::to_string(qubit) + " out of range for " +
                        std::to_string(num_qubits) + " qubits");
    }
}

/// Spreads k over all bit positions except `bit`, leaving that bit 0.
inline index_t insert_zero(index_t k, int bit) {
    const index_t low = k & ((index_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

struct ControlMask {
    index_t mask = 0;
    index_t value = 0;
};

ControlMask validate(const GateSpec &gate, int num_qubits) {
    std::size_t want_targets = 1;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::Z:
    case GateKind::H:
        break;
    case GateKind::CNOT:
        if (gate.controls.size() != 1) {
            throw GateError("CNOT needs exactly one control");
        }
        break;
    case GateKind::SWAP:
        want_targets = 2;
        break;
    case GateKind::MULTI_CONTROLLED:
        want_targets = 0;
        if (gate.targets.empty()) {
            throw GateError("multi-controlled gate needs at least one target");
        }
        break;
    }
    if (want_targets != 0 && gate.targets.size() != want_targets) {
        throw GateError("gate expects " + std::to_string(want_targets) + " target(s), got " +
                        std::to_string(gate.targets.size()));
    }

    index_t used = 0;
    auto claim = [&](int q) {
        check_qubit(q, num_qubits);
        const index_t bit = index_t{1} << q;
        if (used & bit) {
            throw GateError("qubit " + std::to_string(q) + " used twice in one gate");
        }
        used |= bit;
    };
    for (int t : gate.targets) {
        claim(t);
    }
    ControlMask cm;
    for (const auto &c : gate.controls) {
        claim(c.qubit);
        if (c.polarity != 0 && c.polarity != 1) {
            throw GateError("control polarity must be 0 or 1");
        }
        cm.mask |= index_t{1} << c.qubit;
        if (c.polarity == 1) {
            cm.value |= index_t{1} << c.qubit;
        }
    }
    return cm;
}

} // namespace

GateSpec GateSpec::controlled_by(int qubit, int polarity) const {
    GateSpec out = *this;
    out.controls.push_back({qubit, polarity});
    return out;
}

namespace gates {
GateSpec x(int q) { return {GateKind::X, {q}, {}}; }
GateSpec z(int q) { return {GateKind::Z, {q}, {}}; }
GateSpec h(int q) { return {GateKind::H, {q}, {}}; }
GateSpec swap(int a, int b) { return {GateKind::SWAP, {a, b}, {}}; }
GateSpec cnot(int control, int target) { return {GateKind::CNOT, {target}, {{control, 1}}}; }
GateSpec mcx(std::vector<int> targets, std::vector<Control> controls) {
    return {GateKind::MULTI_CONTROLLED, std::move(targets), std::move(controls)};
}
} // namespace gates

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amps_.assign(size(), complex_t{});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<complex_t> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<complex_t> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len == 0 || !std::has_single_bit(len)) {
        throw DimensionError("amplitude count " + std::to_string(len) +
                             " is not a power of two");
    }
    const int width = std::countr_zero(len);
    check_width(width);
    StateVector sv(width, std::move(amplitudes));
    for (const auto &a : sv.amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("non-finite amplitude");
        }
    }
    const double norm = sv.norm_squared();
    if (std::abs(norm - 1.0) > kStateNormTolerance) {
        throw ValidationError("state norm " + std::to_string(norm) + " is not 1");
    }
    return sv;
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

double StateVector::subspace_weight(index_t mask, index_t value) const noexcept {
    double sum = 0.0;
    for (index_t i = 0; i < size(); ++i) {
        if ((i & mask) == value) {
            sum += std::norm(amps_[i]);
        }
    }
    return sum;
}

double StateVector::probability(int qubit, int outcome) const {
    check_qubit(qubit, num_qubits_);
    if (outcome != 0 && outcome != 1) {
        throw ParameterError("measurement outcome must be 0 or 1");
    }
    const index_t bit = index_t{1} << qubit;
    return subspace_weight(bit, outcome ? bit : 0);
}

void StateVector::apply(const GateSpec &gate) {
    const ControlMask cm = validate(gate, num_qubits_);
    complex_t *amps = amps_.data();
    auto active = [cm](index_t i) { return (i & cm.mask) == cm.value; };

    switch (gate.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Z:
    case GateKind::H: {
        const int t = gate.targets[0];
        const index_t tbit = index_t{1} << t;
        const GateKind kind = gate.kind;
        parallel_for(size() >> 1, [=](std::size_t begin, std::size_t end) {
            for (index_t k = begin; k < end; ++k) {
                const index_t i0 = insert_zero(k, t);
                if (!active(i0)) {
                    continue;
                }
                const index_t i1 = i0 | tbit;
                switch (kind) {
                case GateKind::Z:
                    amps[i1] = -amps[i1];
                    break;
                case GateKind::H: {
                    const complex_t a0 = amps[i0];
                    const complex_t a1 = amps[i1];
                    amps[i0] = (a0 + a1) * kInvSqrt2;
                    amps[i1] = (a0 - a1) * kInvSqrt2;
                    break;
                }
                default:
                    std::swap(amps[i0], amps[i1]);
                }
            }
        });
        break;
    }
    case GateKind::SWAP: {
        const int lo = std::min(gate.targets[0], gate.targets[1]);
        const int hi = std::max(gate.targets[0], gate.targets[1]);
        const index_t lo_bit = index_t{1} << lo;
        const index_t hi_bit = index_t{1} << hi;
        parallel_for(size() >> 2, [=](std::size_t begin, std::size_t end) {
            for (index_t k = begin; k < end; ++k) {
                const index_t base = insert_zero(insert_zero(k, lo), hi);
                if (active(base)) {
                    std::swap(amps[base | lo_bit], amps[base | hi_bit]);
                }
            }
        });
        break;
    }
    case GateKind::MULTI_CONTROLLED: {
        index_t tmask = 0;
        for (int t : gate.targets) {
            tmask |= index_t{1} << t;
        }
        // Pair each index whose lowest target bit is 0 with its full flip.
        const int first = std::countr_zero(tmask);
        parallel_for(size() >> 1, [=](std::size_t begin, std::size_t end) {
            for (index_t k = begin; k < end; ++k) {
                const index_t i0 = insert_zero(k, first);
                if (active(i0)) {
                    std::swap(amps[i0], amps[i0 ^ tmask]);
                }
            }
        });
        break;
    }
    }
}

void StateVector::apply(std::span<const GateSpec> sequence) {
    for (const auto &g : sequence) {
        apply(g);
    }
}

StateVector init_basis(int num_qubits, index_t basis_index) {
    StateVector sv(num_qubits);
    if (basis_index >= sv.size()) {
        throw DimensionError("basis index " + std::to_string(basis_index) +
                             " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    std::vector<complex_t> amps(sv.size());
    amps[basis_index] = 1.0;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector apply_gate(StateVector state, const GateSpec &gate) {
    state.apply(gate);
    return state;
}

StateVector tensor(const StateVector &state_a, const StateVector &state_b) {
    const int width = state_a.num_qubits() + state_b.num_qubits();
    check_width(width);
    std::vector<complex_t> amps(index_t{1} << width);
    const index_t low = state_b.size();
    for (index_t ia = 0; ia < state_a.size(); ++ia) {
        for (index_t ib = 0; ib < low; ++ib) {
            amps[ia * low + ib] = state_a.amps_[ia] * state_b.amps_[ib];
        }
    }
    return StateVector(width, std::move(amps));
}

Projection project_and_renormalize(const StateVector &state, int qubit, int outcome) {
    const double p = state.probability(qubit, outcome);
    if (!(p > 0.0)) {
        throw MeasurementError("outcome " + std::to_string(outcome) + " on qubit " +
                                   std::to_string(qubit) + " has zero probability",
                               p);
    }
    const index_t bit = index_t{1} << qubit;
    const index_t keep = outcome ? bit : 0;
    const double inv = 1.0 / std::sqrt(p);
    std::vector<complex_t> amps(state.size());
    for (index_t i = 0; i < state.size(); ++i) {
        if ((i & bit) == keep) {
            amps[i] = state.amps_[i] * inv;
        }
    }
    return {StateVector(state.num_qubits(), std::move(amps)), p};
}

std::uint64_t sample_binomial(double p, std::uint64_t shots, std::uint64_t seed) {
    if (!(p > 0.0)) {
        return 0;
    }
    if (p >= 1.0) {
        return shots;
    }
    const std::uint64_t shards = (shots + kShardShots - 1) / kShardShots;
    std::vector<std::uint64_t> hits(shards, 0);
    auto run_shard = [&](std::uint64_t s) {
        const std::uint64_t begin = s * kShardShots;
        const std::uint64_t count = std::min(kShardShots, shots - begin);
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 engine(seq);
        std::binomial_distribution<std::uint64_t> dist(count, p);
        hits[s] = dist(engine);
    };

    const unsigned workers = std::min<std::uint64_t>(thread_count(), shards);
    if (workers <= 1) {
        for (std::uint64_t s = 0; s < shards; ++s) {
            run_shard(s);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t s = w; s < shards; s += workers) {
                    run_shard(s);
                }
            });
        }
    }
    std::uint64_t total = 0;
    for (auto h : hits) {
        total += h;
    }
    return total;
}

std::array<std::uint64_t, 2> sample_measure(const StateVector &state, int qubit,
                                            std::uint64_t rng_seed, std::uint64_t shots) {
    if (shots < 1) {
        throw ParameterError("shots must be at least 1");
    }
    const double p1 = std::clamp(state.probability(qubit, 1), 0.0, 1.0);
    const std::uint64_t ones = sample_binomial(p1, shots, rng_seed);
    return {shots - ones, ones};
}

} // namespace qamp
