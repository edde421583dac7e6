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

#include "qamp/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qamp/errors.hpp"

namespace qamp {

namespace {

constexpr int kMaxMatrixWidth = 14;
constexpr double kNormTolerance = 1e-12;

bool is_finite(complex_t z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_width(int n) {
    if (n < 0 || n > kMaxMatrixWidth) {
        throw DimensionError("matrix register width " + std::to_string(n) +
                             " outside [0, " + std::to_string(kMaxMatrixWidth) + "]");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    check_width(n);
    entries_.assign(dim() * dim(), complex_t{});
}

ComplexMatrix::ComplexMatrix(int n, std::vector<complex_t> entries)
    : n_(n), entries_(std::move(entries)) {
    check_width(n);
    if (entries_.size() != dim() * dim()) {
        throw DimensionError("expected " + std::to_string(dim() * dim()) +
                             " entries for n = " + std::to_string(n) + ", got " +
                             std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!is_finite(entries_[i])) {
            throw ValidationError("non-finite matrix entry at (" +
                                  std::to_string(i / dim()) + ", " +
                                  std::to_string(i % dim()) + ")");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

double ComplexMatrix::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &z : entries_) {
        sum += std::norm(z);
    }
    return sum;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(n_);
    for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t k = 0; k < dim(); ++k) {
            out(k, j) = (*this)(j, k);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z = std::conj(z);
    }
    return out;
}

ComplexMatrix ComplexMatrix::scaled(complex_t factor) const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z *= factor;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.n() != b.n()) {
        throw DimensionError("cannot compare matrices of width " + std::to_string(a.n()) +
                             " and " + std::to_string(b.n()));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

ComplexMatrix pad_to_square(const ComplexRows &rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DimensionError("cannot pad an empty matrix");
    }
    const std::size_t cols = rows.front().size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("row " + std::to_string(r) + " has " +
                                 std::to_string(rows[r].size()) + " entries, expected " +
                                 std::to_string(cols));
        }
    }
    const std::size_t needed = std::max(rows.size(), cols);
    int n = 1;
    while ((std::size_t{1} << n) < needed) {
        ++n;
    }
    check_width(n);

    ComplexMatrix out(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t k = 0; k < cols; ++k) {
            if (!is_finite(rows[r][k])) {
                throw ValidationError("non-finite matrix entry at (" + std::to_string(r) +
                                      ", " + std::to_string(k) + ")");
            }
            out(r, k) = rows[r][k];
        }
    }
    return out;
}

PreparedMatrix::PreparedMatrix(ComplexMatrix scaled, complex_t b, double s_original,
                               double c)
    : matrix_(std::move(scaled)), b_(b), s_original_(s_original), c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ParameterError("slack parameter c must be a finite positive number");
    }
    if (!is_finite(b) || !std::isfinite(s_original) || s_original < 0.0) {
        throw ValidationError("prepared matrix has non-finite b or s_original");
    }
    const double sum = matrix_.norm_squared();
    if (!(sum < 1.0)) {
        throw ValidationError("prepared matrix violates sum |a|^2 < 1 (sum = " +
                              std::to_string(sum) + ")");
    }
    if (std::abs(std::norm(b_) + sum - 1.0) > kNormTolerance) {
        throw ValidationError("prepared matrix violates |b|^2 + sum |a|^2 = 1");
    }
}

PreparedMatrix PreparedMatrix::unweakened(ComplexMatrix unit_norm) {
    if (std::abs(unit_norm.norm_squared() - 1.0) > kNormTolerance) {
        throw ValidationError("encoding without slack requires sum |a|^2 = 1");
    }
    PreparedMatrix pm;
    pm.matrix_ = std::move(unit_norm);
    pm.b_ = 0.0;
    pm.s_original_ = 1.0;
    pm.c_ = 0.0;
    return pm;
}

PreparedMatrix prepare(const ComplexMatrix &a, double c, const PrepareOptions &options) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ParameterError("slack parameter c must be a finite positive number");
    }
    if (!std::isfinite(options.b_phase)) {
        throw ParameterError("b phase must be finite");
    }
    const double s = a.norm_squared();
    if (!std::isfinite(s)) {
        throw ValidationError("sum of squared magnitudes overflows");
    }
    ComplexMatrix scaled = a.scaled(1.0 / (s + c));
    // sum |a~|^2 = s / (s + c)^2, which reaches 1 when s < 1 and c <= sqrt(s) - s.
    // Any c > 1/4 is safe for every matrix.
    if (!(scaled.norm_squared() < 1.0)) {
        throw ParameterError("slack parameter c = " + std::to_string(c) +
                             " too small for this matrix: need c > sqrt(s) - s = " +
                             std::to_string(std::sqrt(s) - s));
    }
    const double b_abs = std::sqrt(std::max(0.0, 1.0 - scaled.norm_squared()));
    return PreparedMatrix(std::move(scaled), std::polar(b_abs, options.b_phase), s, c);
}

ComplexMatrix matmul_oracle(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.n() != b.n()) {
        throw DimensionError("cannot multiply matrices of width " + std::to_string(a.n()) +
                             " and " + std::to_string(b.n()));
    }
    const std::size_t dim = a.dim();
    ComplexMatrix out(a.n());
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            complex_t acc{};
            for (std::size_t l = 0; l < dim; ++l) {
                acc += a(j, l) * b(l, k);
            }
            out(j, k) = acc;
        }
    }
    return out;
}

ComplexMatrix dagger_oracle(const ComplexMatrix &a) { return a.transpose().conj(); }

} // namespace qamp
