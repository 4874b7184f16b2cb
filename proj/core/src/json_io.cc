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

#include <string>

#include "qentro/error.h"

namespace qentro {

namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw Error(ErrorCode::Parse, what);
}

const nlohmann::json &field(const nlohmann::json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        schema_error(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

double number(const nlohmann::json &j, const std::string &where) {
    if (!j.is_number()) {
        schema_error(where + " must be a number");
    }
    return j.get<double>();
}

std::vector<std::vector<double>> real_grid(const nlohmann::json &j, size_t dim, const char *name) {
    if (!j.is_array() || j.size() != dim) {
        schema_error(std::string("\"") + name + "\" must be an array of " + std::to_string(dim) + " rows");
    }
    std::vector<std::vector<double>> out(dim, std::vector<double>(dim));
    for (size_t r = 0; r < dim; r++) {
        const auto &row = j[r];
        if (!row.is_array() || row.size() != dim) {
            schema_error(std::string("\"") + name + "\" row " + std::to_string(r) + " must have " + std::to_string(dim) +
                         " entries");
        }
        for (size_t c = 0; c < dim; c++) {
            out[r][c] = number(row[c], std::string(name) + " entry");
        }
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const ComplexMatrix &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (size_t r = 0; r < m.dim(); r++) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (size_t c = 0; c < m.dim(); c++) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

nlohmann::json to_json(const PureState &s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &z : s.amplitudes()) {
        amps.push_back({{"re", z.real()}, {"im", z.imag()}});
    }
    return {{"amplitudes", std::move(amps)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    const auto &dim_field = field(j, "dim");
    if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
        schema_error("\"dim\" must be a positive integer");
    }
    auto dim = static_cast<size_t>(dim_field.get<long long>());
    auto re = real_grid(field(j, "re"), dim, "re");
    std::vector<std::vector<double>> im(dim, std::vector<double>(dim, 0.0));
    if (j.contains("im")) {
        im = real_grid(j.at("im"), dim, "im");
    }
    std::vector<std::vector<Complex>> rows(dim, std::vector<Complex>(dim));
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            rows[r][c] = Complex(re[r][c], im[r][c]);
        }
    }
    return ComplexMatrix::from_rows(rows);
}

PureState pure_state_from_json(const nlohmann::json &j) {
    const auto &amps = field(j, "amplitudes");
    if (!amps.is_array()) {
        schema_error("\"amplitudes\" must be an array");
    }
    ComplexVector v;
    for (const auto &a : amps) {
        double re = number(field(a, "re"), "amplitude re");
        double im = a.contains("im") ? number(a.at("im"), "amplitude im") : 0.0;
        v.emplace_back(re, im);
    }
    return PureState(std::move(v));
}

std::vector<double> probabilities_from_json(const nlohmann::json &j) {
    const auto &probs = field(j, "probabilities");
    if (!probs.is_array()) {
        schema_error("\"probabilities\" must be an array");
    }
    std::vector<double> out;
    for (const auto &p : probs) {
        out.push_back(number(p, "probability"));
    }
    return out;
}

Ensemble ensemble_from_json(const nlohmann::json &j) {
    const auto &e = field(j, "ensemble");
    Ensemble out;
    if (e.contains("pure")) {
        const auto &pure = e.at("pure");
        if (!pure.is_array()) {
            schema_error("\"pure\" must be an array");
        }
        for (const auto &part : pure) {
            out.pure_parts.push_back(
                {number(field(part, "weight"), "weight"), pure_state_from_json(field(part, "state"))});
        }
    }
    if (e.contains("mixed") && !e.at("mixed").is_null()) {
        const auto &mixed = e.at("mixed");
        out.mixed_part = WeightedMixed{
            number(field(mixed, "weight"), "weight"), DensityMatrix(matrix_from_json(field(mixed, "matrix")))};
    }
    out.validate();
    return out;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        schema_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace qentro
