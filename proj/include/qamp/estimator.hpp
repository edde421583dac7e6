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
 * Recovery of the normalization G that the conditional measurement drops.
 *
 * S1 = |b1 b2|^2 is known from preparation. On the output state the K1 = 0
 * outcome has probability S1~ = S1 / G^2, so G = sqrt(S1 / S1~). S1~ is
 * estimated from shot counts; each shot stands for one full pipeline run.
 */
#pragma once

#include <cstdint>

#include "qamp/complex_matrix.hpp"
#include "qamp/multiplier.hpp"

namespace qamp {

struct GEstimate {
    double s1 = 0.0;
    double s1_tilde_exact = 0.0;
    double s1_tilde_sampled = 0.0;
    double g_exact = 0.0;
    double g_hat = 0.0;
    /**
     * Binomial standard error of S1~ propagated to g_hat. The variance uses
     * the Agresti-Coull proportion (k + 2) / (shots + 4), which stays
     * positive when every shot lands on the same outcome.
     */
    double stderr_g = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t k1_zero_count = 0;
    /// shots + 1: the estimate plus one more run that keeps the product.
    std::uint64_t nominal_runs = 0;
};

/**
 * Throws ParameterError for shots < 1, MethodUndefinedError when S1 = 0,
 * and EstimateUnavailableError when no shot lands on K1 = 0.
 */
GEstimate estimate_g(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                     const Manipulations &m, std::uint64_t shots, std::uint64_t seed);

} // namespace qamp
