// Copyright 2026 The Qentro Authors
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

#include "qentro/json_io.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qentro/entropy.h"
#include "qentro/error.h"
#include "test_util.h"

using namespace qentro;

namespace {

template <typename F>
ErrorCode code_of(F f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(json_io, matrix_round_trip) {
    std::mt19937_64 rng(61);
    for (size_t dim : {1, 2, 5}) {
        auto m = oracle::random_hermitian(dim, rng);
        auto text = to_json(m).dump();
        EXPECT_EQ(max_abs_diff(matrix_from_json(parse_json(text)), m), 0.0);
    }
}

TEST(json_io, pure_state_round_trip) {
    std::mt19937_64 rng(62);
    auto s = oracle::random_pure_state(3, rng);
    auto back = pure_state_from_json(parse_json(to_json(s).dump()));
    for (size_t k = 0; k < 3; k++) {
        EXPECT_EQ(back[k], s[k]);
    }
}

TEST(json_io, example_matrix_file) {
    auto j = parse_json(R"({"dim": 2, "re": [[0.5, 0.25], [0.25, 0.5]], "im": [[0, 0], [0, 0]]})");
    DensityMatrix rho(matrix_from_json(j));
    EXPECT_DOUBLE_EQ(informational(rho).value, 1.0);
    // "im" may be omitted for real matrices.
    auto real_only = matrix_from_json(parse_json(R"({"dim": 1, "re": [[1]]})"));
    EXPECT_EQ(real_only(0, 0), Complex(1, 0));
}

TEST(json_io, schema_violations_are_parse_errors) {
    EXPECT_EQ(code_of([] { parse_json("{\"dim\": 2,"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(parse_json(R"({"re": [[1]]})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(parse_json(R"({"dim": 2, "re": [[1, 0]]})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(parse_json(R"({"dim": 1, "re": [["x"]]})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(parse_json(R"({"dim": 0, "re": []})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { pure_state_from_json(parse_json(R"({"amplitudes": 3})")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { probabilities_from_json(parse_json(R"([0.5, 0.5])")); }), ErrorCode::Parse);
}

TEST(json_io, invariant_violations_keep_domain_codes) {
    EXPECT_EQ(code_of([] { pure_state_from_json(parse_json(R"({"amplitudes": [{"re": 1}, {"re": 1}]})")); }),
              ErrorCode::NotNormalized);
    auto j = parse_json(R"({"dim": 2, "re": [[1.5, 0], [0, -0.5]]})");
    EXPECT_EQ(code_of([&] { DensityMatrix(matrix_from_json(j)); }), ErrorCode::NotADensityMatrix);
}

TEST(json_io, ensemble_example) {
    auto j = parse_json(R"({"ensemble": {
        "pure": [{"weight": 0.3, "state": {"amplitudes": [{"re": 0.7071067811865476}, {"re": 0.7071067811865476}]}}],
        "mixed": {"weight": 0.7, "matrix": {"dim": 2, "re": [[0.8, 0], [0, 0.2]]}}}})");
    auto e = ensemble_from_json(j);
    auto check = ensemble_bound_check(e);
    EXPECT_NEAR(check.lhs, 0.8687212463394045, 1e-12);
    EXPECT_NEAR(check.rhs, 0.8053496664211537, 1e-12);
    auto bad = parse_json(R"({"ensemble": {"pure": [{"weight": 0.5, "state": {"amplitudes": [{"re": 1}, {"re": 0}]}}]}})");
    EXPECT_EQ(code_of([&] { ensemble_from_json(bad); }), ErrorCode::WeightSumInvalid);
}

TEST(json_io, probabilities) {
    auto p = probabilities_from_json(parse_json(R"({"probabilities": [0.5, 0.25, 0.25]})"));
    EXPECT_DOUBLE_EQ(shannon(ProbabilityVector(p)).value, 1.5);
}
