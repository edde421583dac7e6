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
 * Classical complex matrices: the objects that get amplitude-encoded, the
 * rescaling that makes them encodable, and the reference linear algebra
 * every simulated result is compared against.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qamp {

using complex_t = std::complex<double>;

/// Entrywise tolerance used when comparing decoded results to the oracle.
inline constexpr double kOracleTolerance = 1e-10;

/**
 * Dense 2^n x 2^n complex matrix stored row-major.
 *
 * Every entry is finite; constructors reject NaN and infinities.
 */
class ComplexMatrix {
  public:
    /// Zero matrix of width 2^n.
    explicit ComplexMatrix(int n = 0);

    /// Takes ownership of row-major entries; size must be exactly 4^n.
    ComplexMatrix(int n, std::vector<complex_t> entries);

    static ComplexMatrix identity(int n);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return std::size_t{1} << n_; }

    complex_t operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }
    complex_t &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim() + col];
    }

    std::span<const complex_t> entries() const noexcept { return entries_; }

    /// Sum of squared magnitudes of all entries.
    double norm_squared() const noexcept;

    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    ComplexMatrix scaled(complex_t factor) const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    int n_;
    std::vector<complex_t> entries_;
};

/// Largest |a_jk - b_jk|; dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Row-major rows of arbitrary (rectangular) shape, as read from input files.
using ComplexRows = std::vector<std::vector<complex_t>>;

/**
 * Embeds a rectangular matrix in the top-left block of the smallest
 * 2^n x 2^n zero matrix that holds it, with n >= 1.
 */
ComplexMatrix pad_to_square(const ComplexRows &rows);

/**
 * A matrix rescaled so that its squared-magnitude sum is strictly below one,
 * together with the slack amplitude b that completes the unit norm.
 */
class PreparedMatrix {
  public:
    /// Validates and assembles the parts. Requires sum |a~|^2 < 1 and
    /// |b|^2 + sum |a~|^2 = 1 within 1e-12.
    PreparedMatrix(ComplexMatrix scaled, complex_t b, double s_original, double c);

    /**
     * Encoding without slack: sum |a~|^2 = 1 within 1e-12 and b = 0.
     *
     * This is the plain unit-norm encoding. It is the only way to obtain a
     * prepared matrix with b = 0, which the G estimator cannot handle.
     */
    static PreparedMatrix unweakened(ComplexMatrix unit_norm);

    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    complex_t b() const noexcept { return b_; }
    double s_original() const noexcept { return s_original_; }
    double c() const noexcept { return c_; }
    int n() const noexcept { return matrix_.n(); }

    /// s + c; multiplying the prepared matrix by it recovers the original.
    double scale() const noexcept { return s_original_ + c_; }

    /// False only for matrices built by unweakened().
    bool has_slack() const noexcept { return c_ > 0.0; }

  private:
    PreparedMatrix() = default;

    ComplexMatrix matrix_;
    complex_t b_{};
    double s_original_ = 0.0;
    double c_ = 0.0;
};

inline constexpr double kDefaultSlack = 1.0;

struct PrepareOptions {
    /// b = |b| * exp(i * b_phase); the default keeps b real and nonnegative.
    double b_phase = 0.0;
};

/**
 * A~ = A / (s + c) with s = sum |a_jk|^2, and |b|^2 = 1 - sum |a~_jk|^2.
 *
 * Throws ParameterError for c <= 0 (or non-finite c), and when the scaled
 * matrix would still have sum |a~|^2 >= 1. That second case needs s < 1 and
 * c <= sqrt(s) - s, so it cannot happen for c > 1/4.
 */
PreparedMatrix prepare(const ComplexMatrix &a, double c = kDefaultSlack,
                       const PrepareOptions &options = {});

/// Reference product by the textbook triple loop.
ComplexMatrix matmul_oracle(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix dagger_oracle(const ComplexMatrix &a);

} // namespace qamp
