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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qamp/errors.hpp"
#include "qamp/registers.hpp"
#include "qamp/state_vector.hpp"

namespace qamp {
namespace {

TEST(RegisterLayoutTest, OffsetsFollowDocumentedOrder) {
    for (int n = 1; n <= 6; ++n) {
        for (bool controls : {false, true}) {
            if (4 * n + 6 + (controls ? 3 : 0) > kMaxQubits) {
                EXPECT_THROW(layout_for(n, controls), LayoutError);
                continue;
            }
            const RegisterLayout layout = layout_for(n, controls);
            const testing::Offsets o(n, controls);
            EXPECT_EQ(layout.total_qubits(), o.total);
            EXPECT_EQ(layout.total_qubits(), 4 * n + 6 + (controls ? 3 : 0));
            EXPECT_EQ(layout.qubit(Subsystem::M1), o.m1);
            EXPECT_EQ(layout.qubit(Subsystem::M2), o.m2);
            EXPECT_EQ(layout.slice(Subsystem::R1).first, o.r1);
            EXPECT_EQ(layout.slice(Subsystem::C1).first, o.c1);
            EXPECT_EQ(layout.slice(Subsystem::R2).first, o.r2);
            EXPECT_EQ(layout.slice(Subsystem::C2).first, o.c2);
            EXPECT_EQ(layout.slice(Subsystem::C2).width, n);
            EXPECT_EQ(layout.qubit(Subsystem::K1), o.k1);
            EXPECT_EQ(layout.qubit(Subsystem::K2), o.k2);
            EXPECT_EQ(layout.qubit(Subsystem::B), o.b);
            EXPECT_EQ(layout.qubit(Subsystem::BT), o.bt);
            EXPECT_EQ(layout.has(Subsystem::Q1), controls);
            if (controls) {
                EXPECT_EQ(layout.qubit(Subsystem::Q1), o.q1);
                EXPECT_EQ(layout.qubit(Subsystem::Q3), o.q3);
            }
        }
    }
}

TEST(RegisterLayoutTest, SlicesTileTheRegister) {
    const RegisterLayout layout = layout_for(3, true);
    std::uint64_t seen = 0;
    for (Subsystem s : kAllSubsystems) {
        const std::uint64_t m = layout.slice(s).mask();
        EXPECT_EQ(seen & m, 0u);
        seen |= m;
    }
    EXPECT_EQ(seen, (std::uint64_t{1} << layout.total_qubits()) - 1);
}

TEST(RegisterLayoutTest, Errors) {
    EXPECT_THROW(layout_for(0), LayoutError);
    EXPECT_THROW(layout_for(7), LayoutError);
    EXPECT_NO_THROW(layout_for(6));
    EXPECT_THROW(layout_for(6, true), LayoutError);
    const RegisterLayout layout = layout_for(2);
    EXPECT_THROW(layout.slice(Subsystem::Q2), LayoutError);
    EXPECT_THROW(layout.qubit(Subsystem::R1), LayoutError);
    EXPECT_THROW(subsystem_from_name("Z9"), LayoutError);
    EXPECT_THROW(basis_index(layout, {{Subsystem::R1, 4}}), LayoutError);
    EXPECT_THROW(basis_index(layout, {{Subsystem::Q1, 1}}), LayoutError);
}

TEST(RegisterLayoutTest, NamesRoundTrip) {
    for (Subsystem s : kAllSubsystems) {
        EXPECT_EQ(subsystem_from_name(subsystem_name(s)), s);
    }
    EXPECT_EQ(subsystem_name(Subsystem::BT), "BT");
}

TEST(RegisterLayoutTest, BasisIndex) {
    const RegisterLayout layout = layout_for(1);
    EXPECT_EQ(basis_index(layout, {{Subsystem::K1, 1}}), 64u);
    EXPECT_EQ(basis_index(layout, {{Subsystem::R1, 1}, {Subsystem::M2, 1}}), 0b110u);
    const RegisterLayout wide = layout_for(2);
    EXPECT_EQ(basis_index(wide, {{Subsystem::C2, 3}}), 0b11u << 8);
}

} // namespace
} // namespace qamp
