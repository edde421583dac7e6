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

#include "qamp/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qamp/errors.hpp"

namespace qamp {

namespace {

double number_field(const json &value, const std::string &field) {
    if (!value.is_number()) {
        throw FormatError(field, "expected a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw FormatError(field, "value is not finite");
    }
    return x;
}

complex_t complex_field(const json &value, const std::string &field) {
    if (value.is_number()) {
        return {number_field(value, field), 0.0};
    }
    if (!value.is_array() || value.size() != 2) {
        throw FormatError(field, "expected [re, im]");
    }
    return {number_field(value[0], field), number_field(value[1], field)};
}

ComplexRows rows_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw FormatError("document", "expected a JSON object");
    }
    if (!doc.contains("entries")) {
        throw FormatError("entries", "missing");
    }
    const json &entries = doc["entries"];
    if (!entries.is_array() || entries.empty()) {
        throw FormatError("entries", "expected a nonempty array of rows");
    }
    ComplexRows rows;
    std::size_t width = 0;
    for (std::size_t r = 0; r < entries.size(); ++r) {
        const json &row = entries[r];
        const std::string where = "entries[" + std::to_string(r) + "]";
        if (!row.is_array() || row.empty()) {
            throw FormatError(where, "expected a nonempty array");
        }
        if (r == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw FormatError(where, "row has " + std::to_string(row.size()) +
                                         " entries but row 0 has " + std::to_string(width) +
                                         " (rows must be rectangular)");
        }
        std::vector<complex_t> values;
        values.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            values.push_back(complex_field(row[k], where + "[" + std::to_string(k) + "]"));
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

void dump_value(std::ostringstream &out, const json &v, int indent, int depth);

bool is_flat(const json &array) {
    for (const auto &item : array) {
        if (item.is_structured()) {
            return false;
        }
    }
    return true;
}

bool is_flat_rows(const json &array) {
    for (const auto &item : array) {
        if (!item.is_array() || !is_flat(item)) {
            return false;
        }
    }
    return true;
}

void newline(std::ostringstream &out, int indent, int depth) {
    out << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void dump_inline(std::ostringstream &out, const json &array) {
    out << '[';
    for (std::size_t i = 0; i < array.size(); ++i) {
        if (i) {
            out << ", ";
        }
        dump_value(out, array[i], 0, 0);
    }
    out << ']';
}

void dump_value(std::ostringstream &out, const json &v, int indent, int depth) {
    switch (v.type()) {
    case json::value_t::number_float: {
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            out << "null";
            break;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf;
        break;
    }
    case json::value_t::array:
        if (v.empty() || is_flat(v)) {
            dump_inline(out, v);
            break;
        }
        out << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            newline(out, indent, depth + 1);
            // A row of complex pairs stays on one line.
            if (v[i].is_array() && is_flat_rows(v[i])) {
                out << '[';
                for (std::size_t k = 0; k < v[i].size(); ++k) {
                    if (k) {
                        out << ", ";
                    }
                    dump_inline(out, v[i][k]);
                }
                out << ']';
            } else {
                dump_value(out, v[i], indent, depth + 1);
            }
            if (i + 1 < v.size()) {
                out << ',';
            }
        }
        newline(out, indent, depth);
        out << ']';
        break;
    case json::value_t::object: {
        if (v.empty()) {
            out << "{}";
            break;
        }
        out << '{';
        std::size_t i = 0;
        for (const auto &[key, item] : v.items()) {
            newline(out, indent, depth + 1);
            out << json(key).dump() << ": ";
            dump_value(out, item, indent, depth + 1);
            if (++i < v.size()) {
                out << ',';
            }
        }
        newline(out, indent, depth);
        out << '}';
        break;
    }
    default:
        out << v.dump();
    }
}

} // namespace

ComplexMatrix matrix_from_json(const json &doc) {
    ComplexRows rows = rows_from_json(doc);
    if (!doc.contains("n")) {
        try {
            return pad_to_square(rows);
        } catch (const DimensionError &e) {
            throw FormatError("entries", e.what());
        }
    }
    const json &n_field = doc["n"];
    if (!n_field.is_number_integer() || n_field.get<long long>() < 0 ||
        n_field.get<long long>() > 14) {
        throw FormatError("n", "expected an integer in [0, 14]");
    }
    const int n = n_field.get<int>();
    const std::size_t dim = std::size_t{1} << n;
    if (rows.size() != dim || rows.front().size() != dim) {
        throw FormatError("n", "n = " + std::to_string(n) + " requires " +
                                   std::to_string(dim) + "x" + std::to_string(dim) +
                                   " entries, got " + std::to_string(rows.size()) + "x" +
                                   std::to_string(rows.front().size()));
    }
    std::vector<complex_t> flat;
    flat.reserve(dim * dim);
    for (const auto &row : rows) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(flat));
}

bool is_prepared_json(const json &doc) { return doc.is_object() && doc.contains("b"); }

PreparedMatrix prepared_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("n")) {
        throw FormatError("n", "prepared matrices must state n");
    }
    ComplexMatrix m = matrix_from_json(doc);
    for (const char *field : {"b", "s_original", "c"}) {
        if (!doc.contains(field)) {
            throw FormatError(field, "missing");
        }
    }
    const complex_t b = complex_field(doc["b"], "b");
    const double s = number_field(doc["s_original"], "s_original");
    const double c = number_field(doc["c"], "c");
    if (b == complex_t{} && c == 0.0) {
        return PreparedMatrix::unweakened(std::move(m));
    }
    return PreparedMatrix(std::move(m), b, s, c);
}

PreparedMatrix load_prepared(const json &doc, double c) {
    if (is_prepared_json(doc)) {
        return prepared_from_json(doc);
    }
    return prepare(matrix_from_json(doc), c);
}

json complex_to_json(complex_t z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
        json row = json::array();
        for (std::size_t k = 0; k < m.dim(); ++k) {
            row.push_back(complex_to_json(m(j, k)));
        }
        entries.push_back(std::move(row));
    }
    json doc = json::object();
    doc["n"] = m.n();
    doc["entries"] = std::move(entries);
    return doc;
}

json prepared_to_json(const PreparedMatrix &pm) {
    json doc = matrix_to_json(pm.matrix());
    doc["b"] = complex_to_json(pm.b());
    doc["s_original"] = pm.s_original();
    doc["c"] = pm.c();
    return doc;
}

std::string dump_json(const json &doc, int indent) {
    std::ostringstream out;
    dump_value(out, doc, indent, 0);
    out << '\n';
    return out.str();
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("file", "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw FormatError("file", "'" + path + "' is not valid JSON (" + e.what() + ")");
    }
}

void write_text_file(const std::string &path, std::string_view text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("output", "cannot write '" + path + "'");
    }
    out << text;
}

} // namespace qamp
