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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qamp/conjugator.hpp"
#include "qamp/encoder.hpp"
#include "qamp/estimator.hpp"
#include "qamp/multiplier.hpp"
#include "qamp/resources.hpp"

namespace {

using namespace qamp;
using testing::Rng;

constexpr double kProductTol = 1e-10;
constexpr double kNormLawTol = 1e-10;
constexpr double kDeskTol = 1e-12;
constexpr double kConjugateTol = 1e-12;
constexpr double kDenseTol = 1e-12;
constexpr double kRoundTripTol = 1e-14;
constexpr double kSigmaBound = 5.0;
constexpr std::uint64_t kShots = 100000;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Manipulation sets in mask form: bit 0 dagger-a, bit 1 dagger-b, bit 2 swap-order.
Manipulations from_mask(int mask) { return {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}; }

ComplexMatrix conj_of(const ComplexMatrix &a) {
    ComplexMatrix out(a.n());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(i, j) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix composition(const ComplexMatrix &a, const ComplexMatrix &b, int mask) {
    using testing::adjoint_of;
    using testing::product_by_columns;
    switch (mask) {
    case 0:
        return product_by_columns(a, b);
    case 1:
        return product_by_columns(adjoint_of(a), b);
    case 2:
        return product_by_columns(a, adjoint_of(b));
    case 3:
        return product_by_columns(adjoint_of(a), adjoint_of(b));
    case 4:
        return product_by_columns(b, a);
    case 5:
        return conj_of(product_by_columns(b, adjoint_of(a)));
    case 6:
        return conj_of(product_by_columns(adjoint_of(b), a));
    default:
        return adjoint_of(product_by_columns(a, b));
    }
}

struct Criterion12 {
    double worst_product = 0.0;
    double worst_g = 0.0;
    double worst_p = 0.0;
    int runs = 0;
    double seconds = 0.0;
};

Criterion12 run_products() {
    static Criterion12 cached = [] {
        Criterion12 c;
        Rng rng(1001);
        const auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 3; ++n) {
            const RegisterLayout layout = layout_for(n);
            for (int pair = 0; pair < 50; ++pair) {
                const PreparedMatrix pm1 = testing::random_prepared(n, rng);
                const PreparedMatrix pm2 = testing::random_prepared(n, rng);
                for (int mask = 0; mask < 8; ++mask) {
                    const ProductResult r = run_pipeline(pm1, pm2, from_mask(mask), layout);
                    const ComplexMatrix want = composition(pm1.matrix(), pm2.matrix(), mask);
                    c.worst_product = std::max(c.worst_product, max_abs_diff(r.matrix_hat, want));
                    const double g2 = std::norm(r.b_hat) + r.matrix_hat.norm_squared();
                    c.worst_g = std::max(c.worst_g, std::abs(r.g_exact * r.g_exact - g2));
                    c.worst_p = std::max(
                        c.worst_p, std::abs(r.branch_probability - g2 / std::ldexp(1.0, n + 1)));
                    ++c.runs;
                }
            }
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return c;
    }();
    return cached;
}

Outcome criterion1() {
    const Criterion12 c = run_products();
    return {c.worst_product <= kProductTol && c.seconds < 60.0,
            fmt("runs=%.0f max_entry_error=%.3e time=%.1fs", c.runs, c.worst_product, c.seconds)};
}

Outcome criterion2() {
    const Criterion12 c = run_products();
    return {c.worst_g <= kNormLawTol && c.worst_p <= kNormLawTol,
            fmt("max|G^2-(|b|^2+sum|a|^2)|=%.3e max|p-G^2/2^(n+1)|=%.3e", c.worst_g, c.worst_p)};
}

Outcome criterion3() {
    const PreparedMatrix pm = prepare(ComplexMatrix::identity(1).scaled(0.5), 0.5);
    const PipelineRun run = run_pipeline_with_state(pm, pm, {}, layout_for(1));
    const ProductResult &r = run.result;
    const GEstimate e = estimate_g(pm, pm, {}, 1000, kSeed);
    const double e_a = max_abs_diff(r.matrix_hat, ComplexMatrix::identity(1).scaled(0.25));
    const double e_b = std::abs(r.b_hat - complex_t(0.5, 0.0));
    const double e_g = std::abs(r.g_exact - std::sqrt(0.375));
    const double e_p = std::abs(r.branch_probability - 3.0 / 32.0);
    const double e_s = std::abs(e.s1_tilde_exact - 2.0 / 3.0);
    const double worst = std::max({e_a, e_b, e_g, e_p, e_s});
    return {worst <= kDeskTol, fmt("max_error=%.3e (A %.1e, p %.1e)", worst, e_a, e_p)};
}

Outcome criterion4() {
    Rng rng(4004);
    double worst_inv = 0.0;
    double worst_dag = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 3;
        const PreparedMatrix pm = testing::random_prepared(n, rng);
        const EncodedBlock block = EncodedBlock::standalone(n);
        const StateVector s = encode(pm);
        const StateVector w = hermitian_conjugate(s, block);
        const StateVector ww = hermitian_conjugate(w, block);
        for (index_t k = 0; k < s.size(); ++k) {
            worst_inv = std::max(worst_inv, std::abs(ww[k] - s[k]));
        }
        const DecodedBlock d = decode(w, block);
        worst_dag = std::max(worst_dag, max_abs_diff(d.matrix, testing::adjoint_of(pm.matrix())));
        worst_dag = std::max(worst_dag, d.residual);
    }
    return {worst_inv <= kConjugateTol && worst_dag <= kConjugateTol,
            fmt("states=100 max|WW-1|=%.3e max|decode-A^+|=%.3e", worst_inv, worst_dag)};
}

Outcome criterion5() {
    Rng rng(5005);
    const int n = 1;
    const RegisterLayout layout = layout_for(n);
    const auto start = std::chrono::steady_clock::now();
    const testing::DenseOp u =
        testing::dense_w3(n) * testing::dense_w2(n) * testing::dense_w1(n) * testing::dense_w0(n);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const PreparedMatrix pm1 = testing::random_prepared(n, rng);
        const PreparedMatrix pm2 = testing::random_prepared(n, rng);
        const testing::DenseVec dense = u * testing::initial_state(pm1, pm2);
        StateVector s = build_initial(pm1, pm2, layout);
        s = apply_w3(apply_w2(apply_w1(apply_w0(std::move(s), layout), layout), layout), layout);
        for (index_t k = 0; k < s.size(); ++k) {
            worst = std::max(worst, std::abs(s[k] - dense[static_cast<std::int64_t>(k)]));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= kDenseTol,
            fmt("dim=%.0f max_amplitude_error=%.3e time=%.1fs", static_cast<double>(u.rows()),
                worst, seconds)};
}

Outcome criterion6() {
    Rng rng(6006);
    double worst_sigma = 0.0;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + i % 2;
        const PreparedMatrix pm1 = testing::random_prepared(n, rng);
        const PreparedMatrix pm2 = testing::random_prepared(n, rng);
        const GEstimate e = estimate_g(pm1, pm2, from_mask(i % 8), kShots, kSeed + i);
        worst_sigma = std::max(worst_sigma, std::abs(e.g_hat - e.g_exact) / e.stderr_g);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst_sigma <= kSigmaBound,
            fmt("instances=20 shots=%.0f max|g_hat-g|/stderr=%.2f time=%.1fs",
                static_cast<double>(kShots), worst_sigma, seconds)};
}

Outcome criterion7() {
    bool ok = true;
    std::string detail;
    for (bool controls : {false, true}) {
        std::vector<double> depth;
        for (int n = 1; n <= 6; ++n) {
            const ResourceReport r = resource_report(n, controls);
            ok = ok && r.qubits == 4 * n + 6 + (controls ? 3 : 0);
            if (4 * n + 6 + (controls ? 3 : 0) <= kMaxQubits) {
                ok = ok && layout_for(n, controls).total_qubits() == r.qubits;
            }
            depth.push_back(static_cast<double>(r.total_depth));
        }
        const double slope = depth[1] - depth[0];
        for (std::size_t i = 1; i < depth.size(); ++i) {
            ok = ok && depth[i] - depth[i - 1] == slope;
        }
        detail += fmt(controls ? " controls: depth=%.0fn+%.0f" : "qubits=4n+6(+3) depth=%.0fn+%.0f",
                      slope, depth[0] - slope);
    }
    return {ok, detail};
}

Outcome criterion8() {
    Rng rng(8008);
    double worst = 0.0;
    double worst_residual = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 100; ++i) {
            const PreparedMatrix pm = testing::random_prepared(n, rng);
            const DecodedBlock d = decode(encode(pm), EncodedBlock::standalone(n));
            worst = std::max({worst, max_abs_diff(d.matrix, pm.matrix()), std::abs(d.b - pm.b())});
            worst_residual = std::max(worst_residual, d.residual);
        }
    }
    return {worst <= kRoundTripTol && worst_residual < kRoundTripTol,
            fmt("matrices=300 max_error=%.3e max_residual=%.3e", worst, worst_residual)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", criterion1},  {"normalization law", criterion2},
        {"desk case", criterion3},           {"conjugation", criterion4},
        {"dense unitary at n=1", criterion5}, {"shot estimator", criterion6},
        {"resource scaling", criterion7},    {"encoding round trip", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
