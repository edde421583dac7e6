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

#include "qamp/resources.hpp"

#include "qamp/errors.hpp"

namespace qamp {

ResourceReport resource_report(int n, bool with_controls) {
    if (n < 1) {
        throw ParameterError("resource report needs n >= 1");
    }
    const auto un = static_cast<std::size_t>(n);
    ResourceReport r;
    r.n = n;
    r.with_controls = with_controls;
    r.qubits = 4 * n + 6 + (with_controls ? 3 : 0);
    r.w3_controls = 2 * (n + 1);
    r.w3_toffolis = 4 * (static_cast<std::size_t>(r.w3_controls) - 2);

    // Uncontrolled swaps act on disjoint pairs (depth 1); flag-controlled
    // ones share the flag qubit and run one after another.
    const std::size_t q3_gates = 2 * un + 1;
    const std::size_t q12_gates = un + 1;
    r.stages.push_back({"Q3", q3_gates, with_controls ? q3_gates : 1});
    r.stages.push_back({"Q2", q12_gates, with_controls ? q12_gates : 1});
    r.stages.push_back({"Q1", q12_gates, with_controls ? q12_gates : 1});
    r.stages.push_back({"W0", un, 1});
    r.stages.push_back({"W1", un, 1});
    // Controlled sigma_x sigma_z, H, CNOT.
    r.stages.push_back({"W2", 3, 3});
    // X layer, CNOT, Toffoli network, CNOT, X layer.
    r.stages.push_back({"W3", 1, 2 + 2 + r.w3_toffolis});
    r.stages.push_back({"W4", 1, 1});

    for (const auto &s : r.stages) {
        r.total_gates += s.gates;
        r.total_depth += s.depth;
        if (s.name.front() == 'W') {
            r.core_depth += s.depth;
        }
    }
    // core: 1 + 1 + 3 + (8n + 4) + 1; manipulations add 3 or 4n + 3.
    r.depth_slope = with_controls ? 12 : 8;
    r.depth_intercept = 13;
    return r;
}

} // namespace qamp
