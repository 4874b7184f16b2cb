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

#ifndef QENTRO_TOOLS_REPORT_H
#define QENTRO_TOOLS_REPORT_H

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qentro::cli {

enum class OutputFormat { Table, Csv, Json };

/// Everything a subcommand prints, in all three renderings.
///
/// `doc` drives both the JSON and the table output. In the table, an object of the form
/// {"value": x, "unit": u} prints as "x u", arrays of objects print as aligned columns,
/// and numbers use six significant digits. `columns`/`rows` hold the CSV rendering.
struct Report {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void render(OutputFormat format, std::ostream &out) const;
};

/// {"value": x, "unit": u}
nlohmann::ordered_json quantity(double value, std::string_view unit);

/// Shortest text that reads back to the same double.
std::string csv_number(double x);
/// Six significant digits, as shown in tables.
std::string table_number(double x);

}  // namespace qentro::cli

#endif
