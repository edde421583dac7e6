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

#include <ostream>
#include <string>
#include <vector>

namespace qamp::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,       ///< Parse errors, bad parameters, malformed input files.
    kExitDimension = 3,   ///< Inputs whose sizes do not match.
    kExitEstimator = 4,   ///< G recovery undefined or without samples.
    kExitVerifyFailed = 5 ///< Decoded result disagrees with the classical oracle.
};

/**
 * Runs one command. args[0] is the program name. Reports written to "-"
 * go to `out`; diagnostics go to `err` as a single line.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qamp::cli
