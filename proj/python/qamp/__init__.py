# Copyright 2026 The qamp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Amplitude-encoded complex matrix multiplication on a statevector simulator."""

from ._qamp import (
    DimensionError,
    EstimateUnavailableError,
    FormatError,
    LayoutError,
    MethodUndefinedError,
    ParameterError,
    PreparedMatrix,
    QampError,
    ValidationError,
    __version__,
    dagger_oracle,
    estimate_g,
    hermitian_conjugate,
    layout,
    matmul_oracle,
    multiply,
    prepare,
    resource_report,
)

__all__ = [
    "DimensionError",
    "EstimateUnavailableError",
    "FormatError",
    "LayoutError",
    "MethodUndefinedError",
    "ParameterError",
    "PreparedMatrix",
    "QampError",
    "ValidationError",
    "__version__",
    "dagger_oracle",
    "estimate_g",
    "hermitian_conjugate",
    "layout",
    "matmul_oracle",
    "multiply",
    "prepare",
    "resource_report",
]
