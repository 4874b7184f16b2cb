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

#include "report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace qentro::cli {

namespace {

bool is_quantity(const nlohmann::ordered_json &j) {
    return j.is_object() && j.size() == 2 && j.contains("value") && j.contains("unit");
}

std::string scalar_text(const nlohmann::ordered_json &j) {
    if (j.is_null()) {
        return "n/a";
    }
    if (j.is_boolean()) {
        return j.get<bool>() ? "true" : "false";
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return j.dump();
    }
    if (j.is_number()) {
        return table_number(j.get<double>());
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (is_quantity(j)) {
        return scalar_text(j.at("value")) + " " + j.at("unit").get<std::string>();
    }
    if (j.is_array() && std::none_of(j.begin(), j.end(), [](const auto &x) { return x.is_structured(); })) {
        std::string s = "[";
        for (size_t k = 0; k < j.size(); k++) {
            s += (k ? ", " : "") + scalar_text(j[k]);
        }
        return s + "]";
    }
    return j.dump();
}

bool is_record_list(const nlohmann::ordered_json &j) {
    return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const auto &x) { return x.is_object(); });
}

void render_records(const nlohmann::ordered_json &records, const std::string &indent, std::ostream &out) {
    std::vector<std::string> keys;
    for (const auto &[key, value] : records.front().items()) {
        keys.push_back(key);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width(keys.size());
    for (size_t c = 0; c < keys.size(); c++) {
        width[c] = keys[c].size();
    }
    for (const auto &rec : records) {
        auto &row = cells.emplace_back();
        for (size_t c = 0; c < keys.size(); c++) {
            row.push_back(rec.contains(keys[c]) ? scalar_text(rec.at(keys[c])) : "");
            width[c] = std::max(width[c], row.back().size());
        }
    }
    auto line = [&](const std::vector<std::string> &fields) {
        out << indent;
        for (size_t c = 0; c < fields.size(); c++) {
            if (c) {
                out << "  ";
            }
            out << fields[c];
            if (c + 1 < fields.size()) {
                out << std::string(width[c] - fields[c].size(), ' ');
            }
        }
        out << "\n";
    };
    line(keys);
    for (const auto &row : cells) {
        line(row);
    }
}

void render_table(const nlohmann::ordered_json &doc, const std::string &indent, std::ostream &out) {
    for (const auto &[key, value] : doc.items()) {
        if (is_record_list(value)) {
            out << indent << key << ":\n";
            render_records(value, indent + "  ", out);
        } else if (value.is_object() && !is_quantity(value)) {
            out << indent << key << ":\n";
            render_table(value, indent + "  ", out);
        } else {
            out << indent << key << ": " << scalar_text(value) << "\n";
        }
    }
}

}  // namespace

nlohmann::ordered_json quantity(double value, std::string_view unit) {
    return {{"value", value}, {"unit", unit}};
}

std::string csv_number(double x) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

std::string table_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.6g", x);
    return buf;
}

void Report::render(OutputFormat format, std::ostream &out) const {
    switch (format) {
        case OutputFormat::Json:
            out << doc.dump(2) << "\n";
            break;
        case OutputFormat::Csv:
            for (size_t c = 0; c < columns.size(); c++) {
                out << (c ? "," : "") << columns[c];
            }
            out << "\n";
            for (const auto &row : rows) {
                for (size_t c = 0; c < row.size(); c++) {
                    out << (c ? "," : "") << row[c];
                }
                out << "\n";
            }
            break;
        case OutputFormat::Table:
            render_table(doc, "", out);
            break;
    }
}

}  // namespace qentro::cli
