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

#ifndef QENTRO_TOOLS_CLI_H
#define QENTRO_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qentro::cli {

/// Runs `qentro` with the given arguments (program name excluded) and returns the exit
/// code: 0 on success, 2 for unparseable input or arguments, 3 for domain errors.
/// Failures print a single "error: <Code>: <message>" line to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qentro::cli

#endif
