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


#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qamp/errors.hpp"
#include "qamp/matrix_io.hpp"

namespace qamp {
namespace {

std::string field_of(const json &doc) {
    try {
        (void)matrix_from_json(doc);
    } catch (const FormatError &e) {
        return e.field();
    }
    return "";
}

TEST(MatrixIoTest, ReadsComplexPairsAndBareNumbers) {
    const json doc = json::parse(R"({"n": 1, "entries": [[[1, 2], 3], [[0, -1], [0.5, 0]]]})");
    const ComplexMatrix m = matrix_from_json(doc);
    EXPECT_EQ(m(0, 0), complex_t(1, 2));
    EXPECT_EQ(m(0, 1), complex_t(3, 0));
    EXPECT_EQ(m(1, 0), complex_t(0, -1));
}

TEST(MatrixIoTest, PadsWhenNIsAbsent) {
    const json doc = json::parse(R"({"entries": [[1, 2, 3]]})");
    const ComplexMatrix m = matrix_from_json(doc);
    EXPECT_EQ(m.n(), 2);
    EXPECT_EQ(m(0, 2), complex_t(3, 0));
    EXPECT_EQ(m(3, 3), complex_t(0, 0));
}

TEST(MatrixIoTest, SchemaErrorsNameTheField) {
    EXPECT_EQ(field_of(json::parse(R"({"n": 1})")), "entries");
    EXPECT_EQ(field_of(json::parse(R"({"n": 1, "entries": [[1, 2], [3]]})")), "entries[1]");
    EXPECT_EQ(field_of(json::parse(R"({"n": 2, "entries": [[1, 2], [3, 4]]})")), "n");
    EXPECT_EQ(field_of(json::parse(R"({"n": -1, "entries": [[1]]})")), "n");
    EXPECT_EQ(field_of(json::parse(R"({"entries": [[[1, 2, 3]]]})")), "entries[0][0]");
    EXPECT_EQ(field_of(json::parse(R"({"entries": [["x"]]})")), "entries[0][0]");
    EXPECT_EQ(field_of(json::parse(R"([1, 2])")), "document");
}

TEST(MatrixIoTest, PreparedRoundTripIsBitExact) {
    testing::Rng rng(91);
    for (int n = 1; n <= 3; ++n) {
        const PreparedMatrix pm = testing::random_prepared(n, rng);
        const std::string text = dump_json(prepared_to_json(pm));
        const json doc = json::parse(text);
        ASSERT_TRUE(is_prepared_json(doc));
        const PreparedMatrix back = prepared_from_json(doc);
        EXPECT_EQ(back.matrix(), pm.matrix());
        EXPECT_EQ(back.b(), pm.b());
        EXPECT_EQ(back.s_original(), pm.s_original());
        EXPECT_EQ(back.c(), pm.c());
    }
}

TEST(MatrixIoTest, PreparedValidation) {
    json doc = json::parse(R"({"n": 1, "entries": [[0.5, 0], [0, 0.5]], "b": [0.5, 0],
                              "s_original": 0.5, "c": 0.5})");
    EXPECT_THROW(prepared_from_json(doc), ValidationError);
    doc.erase("c");
    EXPECT_THROW(prepared_from_json(doc), FormatError);
    const json free = json::parse(R"({"n": 1, "entries": [[0.5, 0.5], [0.5, 0.5]],
                                     "b": [0, 0], "s_original": 1, "c": 0})");
    EXPECT_FALSE(prepared_from_json(free).has_slack());
}

TEST(MatrixIoTest, LoadPreparedPreparesRawMatrices) {
    const json raw = json::parse(R"({"n": 1, "entries": [[0.5, 0], [0, 0.5]]})");
    const PreparedMatrix pm = load_prepared(raw, 0.5);
    EXPECT_NEAR(std::abs(pm.b()), std::sqrt(0.5), 1e-15);
}

TEST(MatrixIoTest, PrintsSeventeenSignificantDigits) {
    json doc = json::object();
    doc["x"] = 0.1;
    doc["v"] = json::array({1.0 / 3.0, 2});
    const std::string text = dump_json(doc);
    EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
    EXPECT_NE(text.find("[0.33333333333333331, 2]"), std::string::npos);
    EXPECT_EQ(json::parse(text)["v"][0].get<double>(), 1.0 / 3.0);
}

TEST(MatrixIoTest, MissingFile) {
    try {
        (void)read_json_file("/nonexistent/matrix.json");
        FAIL();
    } catch (const FormatError &e) {
        EXPECT_EQ(e.field(), "file");
    }
}

} // namespace
} // namespace qamp
