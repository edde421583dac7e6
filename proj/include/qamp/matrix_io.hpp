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
 * JSON file formats.
 *
 * Matrix:   {"n": 1, "entries": [[[re, im], [re, im]], [[re, im], [re, im]]]}
 * Prepared: the matrix fields plus "b": [re, im], "s_original" and "c".
 *
 * "n" is optional in matrix files; without it the rows may be rectangular
 * and are zero-padded to the next 2^n x 2^n. With it, the entries must be
 * exactly 2^n x 2^n. Complex numbers are [re, im] pairs; a bare number is
 * read as a real value.
 */
#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "qamp/complex_matrix.hpp"

namespace qamp {

using json = nlohmann::ordered_json;

/// Throws FormatError naming the offending field.
ComplexMatrix matrix_from_json(const json &doc);

/// Throws FormatError for schema problems, ValidationError for broken invariants.
PreparedMatrix prepared_from_json(const json &doc);

/// True when the document carries the prepared-matrix fields.
bool is_prepared_json(const json &doc);

/// A prepared file is loaded as-is; a matrix file is prepared with `c`.
PreparedMatrix load_prepared(const json &doc, double c);

json complex_to_json(complex_t z);
json matrix_to_json(const ComplexMatrix &m);
json prepared_to_json(const PreparedMatrix &pm);

/**
 * Serializes with every floating-point value printed to 17 significant
 * digits, so doubles round-trip bit for bit. Output is deterministic.
 */
std::string dump_json(const json &doc, int indent = 2);

/// Throws FormatError("file", ...) when unreadable or not JSON.
json read_json_file(const std::string &path);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text_file(const std::string &path, std::string_view text);

} // namespace qamp
