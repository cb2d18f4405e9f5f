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
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "cli_corpus.hpp"
#include "generators.hpp"
#include "unimetric/json_io.hpp"

namespace unimetric {
namespace {

const std::string kFixtures = UNIMETRIC_FIXTURE_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("unimetric_test_cli_" + name);
}

TEST(CliCorpus, ExitCodes) {
  for (const corpus::Case& c : corpus::cases()) {
    const CliRun r = run(corpus::resolve(c, kFixtures));
    std::string line;
    for (const auto& a : c.args) line += a + " ";
    EXPECT_EQ(r.code, c.exit_code) << line << "\n" << r.err;
    // Every run that got as far as a report carries its own exit status.
    if (!r.out.empty()) EXPECT_EQ(parse_json(r.out).at("exit_status").get<int>(), r.code) << line;
  }
}

TEST(CliCorpus, ByteIdenticalReruns) {
  for (const corpus::Case& c : corpus::cases()) {
    std::vector<std::string> args = corpus::resolve(c, kFixtures);
    args.insert(args.begin(), {"--seed", "42"});
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliReport, Shape) {
  const CliRun r = run({"--seed", "7", "check", fixture("two_point.json")});
  ASSERT_EQ(r.code, 0);
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.back(), '\n');
  const Json j = parse_json(r.out);
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(j.at("command").at("name"), "check");
  EXPECT_EQ(j.at("seed"), "7");
  EXPECT_TRUE(std::regex_match(j.at("inputs_digest").get<std::string>(), std::regex("fnv1a64:[0-9a-f]{16}")));
  for (const Json& res : j.at("results")) {
    EXPECT_TRUE(res.contains("name") && res.contains("witnesses") && res.contains("scalars"));
    const std::string status = res.at("status");
    EXPECT_TRUE(status == "pass" || status == "fail" || status == "info");
  }
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "command", "seed", "inputs_digest", "results", "exit_status"}));

  // Only the seed echo changes with the seed.
  Json other = parse_json(run({"--seed", "8", "check", fixture("two_point.json")}).out);
  other["seed"] = "7";
  other["command"] = j.at("command");
  EXPECT_EQ(other, j);
}

TEST(CliReport, DigestIsFnv1a) {
  const auto path = scratch("digest.json");
  {
    std::ofstream f(path, std::ios::binary);
    f << "a";
  }
  const CliRun r = run({"check", path.string()});
  EXPECT_EQ(r.code, 2);
  const Json j = parse_json(r.out);
  EXPECT_EQ(j.at("inputs_digest"), "fnv1a64:af63dc4c8601ec8c");
  EXPECT_TRUE(j.contains("error"));
  std::filesystem::remove(path);

  const Json missing = parse_json(run({"check", fixture("no_such_file.json")}).out);
  EXPECT_TRUE(missing.at("inputs_digest").is_null());
}

TEST(CliReport, OutFlagWritesSameBytes) {
  const auto path = scratch("out.json");
  const CliRun to_stdout = run({"build", "cone", fixture("cone_two_point.json")});
  const CliRun to_file = run({"--out", path.string(), "build", "cone", fixture("cone_two_point.json")});
  EXPECT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  Json a = parse_json(to_stdout.out);
  Json b = parse_json(bytes.str());
  b["command"] = a.at("command");
  EXPECT_EQ(a, b);
  std::filesystem::remove(path);
}

TEST(CliCommands, TriangleWitness) {
  const Json j = parse_json(run({"check", fixture("triangle_violation.json")}).out);
  const Json& res = j.at("results").at(0);
  EXPECT_EQ(res.at("status"), "fail");
  const Json& w = res.at("witnesses").at(0);
  EXPECT_EQ(w.at("axiom"), "triangle");
  EXPECT_EQ(w.at("points"), Json::array({0, 1, 2}));
  EXPECT_EQ(scalar_from_json(w.at("lhs")), 3);
  EXPECT_EQ(scalar_from_json(w.at("rhs")), 2);
}

TEST(CliCommands, ConeVertexRow) {
  const Json j = parse_json(run({"build", "cone", fixture("cone_two_point.json")}).out);
  const FiniteMetricSpace c = space_from_json(j.at("output"));
  ASSERT_EQ(c.size(), 5u);
  const std::size_t v = 4;
  EXPECT_EQ(c.label(v), "v");
  // Slices t = 0 and t = 1/2 of each base point.
  EXPECT_EQ(c(v, 0), 1);
  EXPECT_EQ(c(v, 1), gen::frac(1, 2));
  EXPECT_EQ(c(v, 2), 1);
  EXPECT_EQ(c(v, 3), gen::frac(1, 2));
}

TEST(CliCommands, CertificatesInReports) {
  auto status_of = [](const Json& report, const std::string& name) {
    for (const Json& r : report.at("results")) {
      if (r.at("name") == name) return r.at("status").get<std::string>();
    }
    return std::string("missing");
  };
  EXPECT_EQ(status_of(parse_json(run({"build", "adjunction", fixture("adjunction_demo.json")}).out), "d3_equals_dinf"),
            "pass");
  EXPECT_EQ(status_of(parse_json(run({"--oracle", "build", "quotient", fixture("quotient_demo.json")}).out),
                      "oracle_dinf"),
            "pass");
  EXPECT_EQ(status_of(parse_json(run({"--oracle", "metrize", fixture("fundamental_valid.json")}).out),
                      "oracle_prefunction"),
            "pass");

  const Json two = parse_json(run({"metrize", fixture("fundamental_two_point.json")}).out);
  EXPECT_EQ(two.at("output").at("metric").at("dist"), two.at("output").at("prefunction"));

  const Json one = parse_json(run({"embed", fixture("one_point.json")}).out);
  EXPECT_EQ(sequence_point_from_json(one.at("output").at("images").at(0)), SequencePoint());

  const Json eight = parse_json(run({"--depth", "4", "embed", fixture("eight_point.json")}).out);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(status_of(eight, "separation_" + std::to_string(n)), "pass");

  const Json over = parse_json(run({"invlim", "perturb", fixture("ladder_over_budget.json")}).out);
  const Json& failure = over.at("results").at(0).at("witnesses").at(0);
  EXPECT_EQ(failure.at("hypothesis"), "closeness");
  EXPECT_EQ(failure.at("level"), 2);
}

TEST(CliArgs, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", fixture("two_point.json")}).code, 2);
  EXPECT_EQ(run({"build", "sphere", fixture("two_point.json")}).code, 2);
  EXPECT_EQ(run({"--depth", "0", "embed", fixture("one_point.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(JsonIo, RoundTrips) {
  gen::Rng rng(gen::kSeed + 70);
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 1, 6));
    EXPECT_EQ(space_from_json(parse_json(to_json(m).dump())), m);
    const Cover c = ball_cover(m, gen::unit_rational(rng, 4));
    EXPECT_EQ(cover_from_json(parse_json(to_json(c).dump())), c);
    const TotalMap f = gen::map(rng, m.size(), 3);
    EXPECT_EQ(map_from_json(map_to_json(f), m.size(), 3), f);
  }
  const SequencePoint p({{0, gen::frac(1, 3)}, {7, gen::frac(-2, 5)}}, gen::frac(1, 9));
  EXPECT_EQ(sequence_point_from_json(parse_json(to_json(p).dump())), p);
  const Cubohedron k(1, {Cube{{{2, gen::frac(1, 2)}}, {0, 3}}});
  const Cubohedron back = cubohedron_from_json(parse_json(to_json(k).dump()));
  EXPECT_EQ(back.level(), 1);
  EXPECT_EQ(back.cubes(), k.cubes());
  EXPECT_EQ(scalar_from_json(Json("-0.25")), gen::frac(-1, 4));
  EXPECT_EQ(scalar_from_json(Json(3)), 3);
  EXPECT_THROW(scalar_from_json(Json("1/0")), std::exception);
  EXPECT_THROW(subset_from_json(Json::array({2, 1}), 3), StructuralError);
  EXPECT_THROW(map_from_json(parse_json(R"({"pairs": [[0, 0]]})"), 2, 1), StructuralError);
}

}  // namespace
}  // namespace unimetric
