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

#ifndef QENTRO_JSON_IO_H
#define QENTRO_JSON_IO_H

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qentro/numerics.h"
#include "qentro/states.h"

namespace qentro {

// Interchange schemas:
//   matrix:       {"dim": n, "re": [[...], ...], "im": [[...], ...]}
//   pure state:   {"amplitudes": [{"re": x, "im": y}, ...]}
//   distribution: {"probabilities": [p0, p1, ...]}
//   ensemble:     {"ensemble": {"pure": [{"weight": w, "state": <pure state>}, ...],
//                               "mixed": {"weight": w, "matrix": <matrix>}}}
//
// Schema violations throw Error(Parse). Values that parse but break a domain
// invariant (an unnormalized state, say) throw the corresponding domain error.

nlohmann::json to_json(const ComplexMatrix &m);
nlohmann::json to_json(const PureState &s);

ComplexMatrix matrix_from_json(const nlohmann::json &j);
PureState pure_state_from_json(const nlohmann::json &j);
std::vector<double> probabilities_from_json(const nlohmann::json &j);
Ensemble ensemble_from_json(const nlohmann::json &j);

/// Parses text, mapping syntax errors to Error(Parse).
nlohmann::json parse_json(std::string_view text);

}  // namespace qentro

#endif
