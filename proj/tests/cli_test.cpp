// Copyright 2026 The latgal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include <json.hpp>

#include "cli_cases.hpp"
#include "fixtures.hpp"

namespace latgal {
namespace {

using namespace latgal::testing;

class Golden : public ::testing::TestWithParam<CliCase> {};

TEST_P(Golden, MatchesByteForByte) {
  const CliCase& c = GetParam();
  const CliRun r = run_cli(c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << c.args;
  EXPECT_EQ(r.out, golden(c.name)) << c.args;
}

INSTANTIATE_TEST_SUITE_P(Cases, Golden, ::testing::ValuesIn(load_cli_cases()),
                         [](const auto& info) {
                           std::string s = info.param.name;
                           for (char& ch : s) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return s;
                         });

TEST(Cli, EveryCommandIsExercised) {
  std::set<std::string> seen;
  for (const auto& c : load_cli_cases()) seen.insert(c.args.substr(0, c.args.find(' ')));
  for (const char* cmd : {"check-lattice", "props", "check-conn", "classify", "bijection",
                          "udim", "extending", "dual", "search", "abelian"}) {
    EXPECT_TRUE(seen.count(cmd)) << cmd;
  }
}

TEST(Cli, JsonOutputsCarrySchema) {
  for (const auto& c : load_cli_cases()) {
    const std::string out = golden(c.name);
    if (out.empty() || out[0] != '{') continue;
    const auto j = nlohmann::json::parse(out);
    EXPECT_EQ(j.at("schema"), 1) << c.name;
  }
}

TEST(Cli, ClassifyWitnessesFromTheExamples) {
  const auto j = nlohmann::json::parse(golden("classify-ab1"));
  const auto& w = j["properties"]["witnesses"];
  EXPECT_EQ(w["essential"], nlohmann::json::array({"a3"}));
  EXPECT_EQ(w["retractable"], nlohmann::json::array({"b2"}));
  EXPECT_EQ(w["uc"], nlohmann::json::array({"b5"}));
}

TEST(Cli, PrintedLatticeRoundTrips) {
  const CliRun first = run_cli("check-lattice grid9.lat");
  ASSERT_EQ(first.exit_code, 0);
  const Lattice l = parse_lattice(first.out);
  EXPECT_EQ(print_lattice(l), first.out);
  EXPECT_TRUE(isomorphic(l, *fixture_lattice("grid9")));
}

TEST(Cli, SearchWritesReproducers) {
  const std::string dir = ::testing::TempDir() + "latgal_repro";
  const CliRun r = run_cli("search --max-size 4 --query 'retractable & !essential' --out '" + dir + "'");
  EXPECT_EQ(r.exit_code, 1);
  const LatticePtr a = share(read_lattice_file(dir + "/A.lat"));
  const LatticePtr b = share(read_lattice_file(dir + "/B.lat"));
  const GaloisConnection g =
      build_connection(resolve_map(read_map_file(dir + "/alpha.map"), a, b),
                       resolve_map(read_map_file(dir + "/beta.map"), b, a));
  const PropertyReport p = classify(g);
  EXPECT_TRUE(p.retractable.holds);
  EXPECT_FALSE(p.essential.holds);
}

}  // namespace
}  // namespace latgal
