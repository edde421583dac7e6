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

#include "qamp/estimator.hpp"

#include <cmath>
#include <string>

#include "qamp/errors.hpp"
#include "qamp/registers.hpp"

namespace qamp {

GEstimate estimate_g(const PreparedMatrix &pm1, const PreparedMatrix &pm2,
                     const Manipulations &m, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw ParameterError("shots must be at least 1");
    }
    GEstimate est;
    est.shots = shots;
    est.seed = seed;
    est.nominal_runs = shots + 1;
    est.s1 = std::norm(pm1.b() * pm2.b());
    if (!(est.s1 > 0.0)) {
        throw MethodUndefinedError(
            "G recovery needs nonzero slack amplitudes (S1 = |b1 b2|^2 is 0)");
    }

    const RegisterLayout layout = layout_for(pm1.n());
    const PipelineRun run = run_pipeline_with_state(pm1, pm2, m, layout);
    const int k1 = layout.qubit(Subsystem::K1);
    est.g_exact = run.result.g_exact;
    est.s1_tilde_exact = run.output.probability(k1, 0);

    const auto counts = sample_measure(run.output, k1, seed, shots);
    est.k1_zero_count = counts[0];
    if (counts[0] == 0) {
        throw EstimateUnavailableError("no K1 = 0 outcomes in " + std::to_string(shots) +
                                           " shots; increase shots",
                                       counts);
    }
    const double p = static_cast<double>(counts[0]) / static_cast<double>(shots);
    est.s1_tilde_sampled = p;
    est.g_hat = std::sqrt(est.s1 / p);
    // Agresti-Coull proportion in the variance; d g / d p = -g / (2 p).
    const double n_adj = static_cast<double>(shots) + 4.0;
    const double p_adj = (static_cast<double>(counts[0]) + 2.0) / n_adj;
    const double stderr_p = std::sqrt(p_adj * (1.0 - p_adj) / n_adj);
    est.stderr_g = 0.5 * est.g_hat * stderr_p / p;
    return est;
}

} // namespace qamp
