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

#include "fixtures.hpp"
#include "latgal/abelian.hpp"
#include "latgal/io.hpp"
#include "latgal/search.hpp"

namespace latgal {
namespace {

using testing::fixture_lattice;

ErrorKind kind_of(const std::string& text) {
  try {
    parse_lattice(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kTheoremViolation;
}

TEST(Io, RoundTripFixtures) {
  for (const char* stem : {"grid9", "z2z4", "latA", "latB", "latC"}) {
    const auto l = fixture_lattice(stem);
    const std::string text = print_lattice(*l);
    const Lattice back = parse_lattice(text);
    EXPECT_TRUE(back == *l) << stem;
    EXPECT_EQ(print_lattice(back), text);
  }
}

TEST(Io, RoundTripEnumerated) {
  for (const auto& l : enumerate_lattices_up_to(6)) {
    const Lattice back = parse_lattice(print_lattice(*l));
    ASSERT_TRUE(back == *l) << l->name();
  }
}

TEST(Io, RoundTripSubgroupLattices) {
  for (const char* g : {"2,4", "4,9", "2,2,2", "8"}) {
    const Lattice l = subgroup_lattice(FinAbGroup::parse(g));
    const Lattice back = parse_lattice(print_lattice(l));
    EXPECT_TRUE(back == l) << g;
    EXPECT_EQ(print_lattice(back), print_lattice(l));
  }
}

TEST(Io, MapRoundTrip) {
  const GaloisConnection g = testing::grid9_connection();
  const std::string text = print_map(g.alpha_map(), "grid9_alpha", "grid9.lat", "grid9.lat");
  const MonotoneMap back = resolve_map(parse_map(text), g.a_ptr(), g.b_ptr());
  EXPECT_EQ(back.table, g.alpha_map().table);
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(kind_of(""), ErrorKind::kParseError);
  EXPECT_EQ(kind_of("lattice x\nelements 0 1\nbottom 0\ntop 1\n"), ErrorKind::kParseError);
  EXPECT_EQ(kind_of("lattice x\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 > 1\n"),
            ErrorKind::kParseError);
  EXPECT_EQ(kind_of("lattice x\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 < 2\n"),
            ErrorKind::kUnknownLabel);
  EXPECT_EQ(kind_of("lattice x\nelements 0 1\ntop 1\ncovers\n0 < 1\n"), ErrorKind::kParseError);
}

TEST(Io, ParseErrorCarriesLocation) {
  try {
    parse_lattice("lattice x\nelements 0 1\nbottom 0\ntop 1\ncovers\n0 <\n", "f.lat");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("f.lat:6:"), std::string::npos) << e.what();
  }
}

TEST(Io, MapErrors) {
  const auto a = fixture_lattice("latA");
  const auto b = fixture_lattice("latB");
  EXPECT_THROW(resolve_map(parse_map("map m from a.lat#A to b.lat#B\n0 -> 0\n"), a, b), Error);
  EXPECT_THROW(resolve_map(parse_map("map m from a.lat#B to b.lat#A\n"), a, b), Error);
  EXPECT_THROW(parse_map("mapp m from a.lat#A to b.lat#B\n"), Error);
}

TEST(Io, Dot) {
  const auto g = fixture_lattice("grid9");
  const std::string dot = emit_dot(*g, closed_elements(*g));
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (std::size_t p = dot.find(s); p != std::string::npos; p = dot.find(s, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("[label="), 9u);
  EXPECT_EQ(count("arrowhead=none"), 12u);
  EXPECT_EQ(count("fillcolor"), 4u);
  const Lattice two = enumerate_lattices(2).front();
  const std::string d2 = emit_dot(two);
  EXPECT_EQ(d2.find("fillcolor"), std::string::npos);
  EXPECT_NE(d2.find("n0 -> n1"), std::string::npos);
}

}  // namespace
}  // namespace latgal
