// Copyright 2026 The unimetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIMETRIC_TOOLS_CLI_HPP_
#define UNIMETRIC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace unimetric {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// Runs one command line (without the program name). The report goes to
/// `out` unless --out is given; diagnostics go to `err`.
/// Returns 0 on success, 1 on a mathematical failure and 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unimetric

#endif  // UNIMETRIC_TOOLS_CLI_HPP_
