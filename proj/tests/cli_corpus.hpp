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
#ifndef UNIMETRIC_TESTS_CLI_CORPUS_HPP_
#define UNIMETRIC_TESTS_CLI_CORPUS_HPP_

// Command lines over tests/fixtures with their expected exit codes.

#include <string>
#include <vector>

namespace unimetric::corpus {

struct Case {
  std::vector<std::string> args;  // fixture names are relative to the fixture directory
  int exit_code;
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {{"check", "two_point.json"}, 0},
      {{"check", "eight_point.json"}, 0},
      {{"check", "triangle_violation.json"}, 1},
      {{"check", "malformed.json"}, 2},
      {{"check", "no_such_file.json"}, 2},
      {{"--oracle", "check", "triangle_violation.json"}, 1},
      {{"build", "cone", "cone_two_point.json"}, 0},
      {{"build", "join", "join_demo.json"}, 0},
      {{"--grid", "1,0", "build", "join", "join_demo.json"}, 1},
      {{"--grid", "0,x", "build", "join", "join_demo.json"}, 2},
      {{"build", "cylinder", "cylinder_demo.json"}, 0},
      {{"build", "adjunction", "adjunction_demo.json"}, 0},
      {{"build", "amalgam", "amalgam_demo.json"}, 0},
      {{"--oracle", "build", "quotient", "quotient_demo.json"}, 0},
      {{"build", "telescope", "telescope_demo.json"}, 0},
      {{"build", "cone", "malformed.json"}, 2},
      {{"--oracle", "metrize", "fundamental_valid.json"}, 0},
      {{"metrize", "fundamental_unseparated.json"}, 1},
      {{"metrize", "fundamental_two_point.json"}, 0},
      {{"embed", "eight_point.json"}, 0},
      {{"embed", "one_point.json"}, 0},
      {{"embed", "wide_pair.json"}, 1},
      {{"--rescale", "embed", "wide_pair.json"}, 0},
      {{"invlim", "ml", "identity_tower.json"}, 0},
      {{"invlim", "converge", "cauchy_divergent.json"}, 1},
      {{"invlim", "cauchy", "cauchy_divergent.json"}, 0},
      {{"invlim", "cauchy", "windowed_integers.json"}, 1},
      {{"invlim", "threads", "retraction_tower.json"}, 0},
      {{"invlim", "separate", "merging_threads.json"}, 0},
      {{"invlim", "perturb", "ladder_exact.json"}, 0},
      {{"invlim", "perturb", "ladder_within_budget.json"}, 0},
      {{"invlim", "perturb", "ladder_over_budget.json"}, 1},
      {{"invlim", "perturb", "identity_tower.json"}, 2},
  };
  return all;
}

/// Prefixes every argument ending in ".json" with `dir`.
inline std::vector<std::string> resolve(const Case& c, const std::string& dir) {
  std::vector<std::string> out;
  for (const std::string& a : c.args) {
    out.push_back(a.size() > 5 && a.ends_with(".json") ? dir + "/" + a : a);
  }
  return out;
}

}  // namespace unimetric::corpus

#endif  // UNIMETRIC_TESTS_CLI_CORPUS_HPP_
