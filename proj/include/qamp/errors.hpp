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

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qamp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together (padding, products, register widths).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Out-of-domain scalar parameters (c <= 0, bad selectors, shots < 1, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Data that violates a type invariant (non-finite entries, norm defects).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Input file content that does not match the expected schema.
class FormatError : public Error {
  public:
    FormatError(const std::string &field, const std::string &what)
        : Error(field + ": " + what), field_(field) {}
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Malformed gate: qubit out of range or used twice.
class GateError : public Error {
  public:
    using Error::Error;
};

/// Subsystem missing from a layout or assignment overflowing its slice.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// Projection onto an outcome that carries no weight.
class MeasurementError : public Error {
  public:
    MeasurementError(const std::string &what, double probability)
        : Error(what), probability_(probability) {}
    double probability() const noexcept { return probability_; }

  private:
    double probability_;
};

/// G recovery needs S1 = |b1 b2|^2 > 0.
class MethodUndefinedError : public Error {
  public:
    using Error::Error;
};

/// Sampling produced no K1 = 0 events, so S1~ has no usable estimate.
class EstimateUnavailableError : public Error {
  public:
    EstimateUnavailableError(const std::string &what,
                             std::array<std::uint64_t, 2> counts)
        : Error(what), counts_(counts) {}
    std::array<std::uint64_t, 2> counts() const noexcept { return counts_; }

  private:
    std::array<std::uint64_t, 2> counts_;
};

} // namespace qamp
