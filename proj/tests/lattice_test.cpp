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
#include "latgal/lattice.hpp"
#include "latgal/search.hpp"
#include "oracles.hpp"

namespace latgal {
namespace {

using testing::fixture_lattice;
using testing::labels_to_set;

Lattice chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> cv;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) cv.emplace_back(labels[i], labels[i + 1]);
  return build_from_covers("chain", labels, labels.front(), labels.back(), cv);
}

Lattice m3() {
  return build_from_covers("M3", {"0", "a", "b", "c", "1"}, "0", "1",
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

Lattice n5() {
  return build_from_covers("N5", {"0", "a", "b", "c", "1"}, "0", "1",
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

TEST(Lattice, GridMeetsAndJoins) {
  const auto g = fixture_lattice("grid9");
  EXPECT_EQ(g->size(), 9u);
  EXPECT_EQ(g->label(g->join(g->at("H1"), g->at("H2"))), "H4");
  EXPECT_EQ(g->label(g->meet(g->at("H6"), g->at("H7"))), "H4");
  EXPECT_EQ(g->label(g->join(g->at("H3"), g->at("H5"))), "G");
  EXPECT_EQ(g->label(g->meet(g->at("H3"), g->at("H5"))), "0");
  EXPECT_TRUE(is_modular(*g));
  EXPECT_TRUE(is_distributive(*g));
  EXPECT_EQ(covers(*g).size(), 12u);
}

TEST(Lattice, MeetJoinAgreeWithOracle) {
  for (const auto& l : enumerate_lattices_up_to(6)) {
    const auto o = oracle::Order::of(*l);
    for (Elem a = 0; a < l->size(); ++a) {
      for (Elem b = 0; b < l->size(); ++b) {
        ASSERT_EQ(l->meet(a, b), o.meet(a, b)) << l->name();
        ASSERT_EQ(l->join(a, b), o.join(a, b)) << l->name();
      }
    }
    ASSERT_EQ(is_modular(*l), oracle::modular(o)) << l->name();
  }
}

TEST(Lattice, ModularAndDistributive) {
  EXPECT_TRUE(is_modular(m3()));
  EXPECT_FALSE(is_distributive(m3()));
  EXPECT_FALSE(is_modular(n5()));
  EXPECT_TRUE(is_distributive(chain(4)));
  // Three atoms c2, c3, c4 under c5 form an M3 above 0, and c1 hangs off it.
  const auto c = fixture_lattice("latC");
  EXPECT_FALSE(is_modular(*c));
}

TEST(Lattice, Complements) {
  const auto c = fixture_lattice("latC");
  EXPECT_EQ(complements_of(*c, c->at("c1")), labels_to_set(*c, {"c2", "c3", "c4", "c5"}));
  const auto g = fixture_lattice("grid9");
  EXPECT_EQ(complements_of(*g, g->at("H3")), labels_to_set(*g, {"H5"}));
  EXPECT_TRUE(complements_of(*g, g->at("H4")).empty());
}

TEST(Lattice, CyclicElements) {
  const auto c = fixture_lattice("latC");
  EXPECT_EQ(cyclic_elements(*c), labels_to_set(*c, {"0", "c1", "c2", "c3", "c4"}));
  EXPECT_TRUE(is_cyclically_generated(*c));
  const auto g = fixture_lattice("grid9");
  EXPECT_EQ(cyclic_elements(*g).size(), 9u);
  const Lattice ch = chain(5);
  EXPECT_EQ(cyclic_elements(ch).size(), 5u);
}

TEST(Lattice, CyclicElementsMatchOracle) {
  for (const auto& l : enumerate_lattices_up_to(6)) {
    const auto o = oracle::Order::of(*l);
    const auto want = oracle::cyclic(o);
    ASSERT_EQ(cyclic_elements(*l), ElemSet(want.begin(), want.end())) << l->name();
  }
}

TEST(Lattice, NotCyclicallyGeneratedExists) {
  // A lattice whose top is not a join of cyclic elements turns up by search.
  const auto q = parse_query("!cyclically_generated", QueryTarget::kLattice);
  const auto w = find_witness(q, 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(is_cyclically_generated(*w->lattice));
}

TEST(Lattice, ConstructionErrors) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kTheoremViolation;
  };
  EXPECT_EQ(kind([] { build_from_covers("x", {"0", "0"}, "0", "0", {}); }),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(kind([] { build_from_covers("x", {"0", "1"}, "0", "2", {{"0", "1"}}); }),
            ErrorKind::kUnknownLabel);
  EXPECT_EQ(kind([] {
              build_from_covers("x", {"0", "a", "1"}, "0", "1",
                                {{"0", "a"}, {"a", "1"}, {"1", "a"}});
            }),
            ErrorKind::kCycleInCovers);
  // Two maximal elements, so no top.
  EXPECT_EQ(kind([] { build_from_covers("x", {"0", "a", "b"}, "0", "a", {{"0", "a"}, {"0", "b"}}); }),
            ErrorKind::kNotBounded);
  // a, b both below c and d: no join.
  EXPECT_EQ(kind([] {
              build_from_covers("x", {"0", "a", "b", "c", "d", "1"}, "0", "1",
                                {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"},
                                 {"b", "d"}, {"c", "1"}, {"d", "1"}});
            }),
            ErrorKind::kNotALattice);
}

TEST(Lattice, DualIsInvolution) {
  for (const auto& l : enumerate_lattices_up_to(6)) {
    const Lattice d = dual(*l);
    EXPECT_EQ(d.bottom(), l->top());
    for (Elem a = 0; a < l->size(); ++a) {
      for (Elem b = 0; b < l->size(); ++b) ASSERT_EQ(d.leq(a, b), l->leq(b, a));
    }
    EXPECT_TRUE(isomorphic(dual(d), *l));
  }
}

TEST(Lattice, Intervals) {
  const auto g = fixture_lattice("grid9");
  const auto iv = interval(*g, g->at("H1"), g->at("H6"));
  EXPECT_EQ(iv.sub.size(), 4u);  // H1, H3, H4, H6
  EXPECT_TRUE(is_distributive(iv.sub));
  EXPECT_THROW(interval(*g, g->at("H3"), g->at("H5")), Error);
  EXPECT_EQ(interval(*g, g->at("H4"), g->at("H4")).sub.size(), 1u);
}

TEST(Lattice, CanonicalFormIgnoresLabels) {
  const Lattice a = m3();
  const Lattice b = build_from_covers("other", {"z", "p", "q", "r", "t"}, "z", "t",
                                      {{"z", "r"}, {"z", "q"}, {"z", "p"}, {"p", "t"}, {"q", "t"}, {"r", "t"}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, n5()));
}

}  // namespace
}  // namespace latgal
