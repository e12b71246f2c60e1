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

#include <filesystem>

#include "fixtures.hpp"
#include "latgal/search.hpp"
#include "latgal/theorems.hpp"
#include "oracles.hpp"

namespace latgal {
namespace {

TEST(Search, LatticeCounts) {
  const std::size_t want[] = {0, 0, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_EQ(enumerate_lattices(n).size(), want[n]) << n;
  }
  EXPECT_THROW(enumerate_lattices(9), Error);
  EXPECT_THROW(enumerate_lattices(1), Error);
}

TEST(Search, LatticeCountsMatchOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(enumerate_lattices(n).size(), oracle::count_lattices(n)) << n;
  }
}

TEST(Search, NoIsomorphicDuplicates) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ls = enumerate_lattices(n);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        ASSERT_FALSE(isomorphic(ls[i], ls[j])) << ls[i].name() << " " << ls[j].name();
      }
    }
  }
}

TEST(Search, Deterministic) {
  const auto a = enumerate_lattices(7);
  const auto b = enumerate_lattices(7);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
}

TEST(Search, GridTablesAreEnumerated) {
  const GaloisConnection g = testing::grid9_connection();
  bool found = false;
  for_each_connection(g.a_ptr(), g.b_ptr(), [&](const GaloisConnection& c) {
    found = c.alpha_map().table == g.alpha_map().table &&
            c.beta_map().table == g.beta_map().table;
    return !found;
  });
  EXPECT_TRUE(found);
}

TEST(Search, BudgetExceeded) {
  const GaloisConnection g = testing::grid9_connection();
  EXPECT_THROW(
      for_each_connection(g.a_ptr(), g.b_ptr(), [](const GaloisConnection&) { return true; }, 3),
      Error);
}

TEST(Search, QueryRoundTrip) {
  for (const char* text : {"essential & !retractable", "(uc | ucc) & A.modular",
                           "!(essential & retractable) | B.uniform", "modular & !distributive",
                           "essential & (retractable | uc) & !beta_additive"}) {
    const PropertyQuery q = parse_query(text);
    const PropertyQuery r = parse_query(print_query(q), q.target);
    EXPECT_TRUE(q == r) << text;
    EXPECT_EQ(print_query(r), print_query(q));
  }
  EXPECT_EQ(parse_query("modular & uniform").target, QueryTarget::kLattice);
  EXPECT_EQ(parse_query("uc").target, QueryTarget::kConnection);
  EXPECT_THROW(parse_query("essential &"), Error);
  EXPECT_THROW(parse_query("frobnicate"), Error);
  EXPECT_THROW(parse_query("essential", QueryTarget::kLattice), Error);
}

TEST(Search, WitnessesForConverses) {
  const auto w1 = find_witness(parse_query("retractable & !essential"), 5);
  ASSERT_TRUE(w1.has_value());
  EXPECT_TRUE(w1->report->retractable.holds);
  EXPECT_FALSE(w1->report->essential.holds);

  const auto w2 = find_witness(parse_query("essential & retractable & !uc"), 6);
  ASSERT_TRUE(w2.has_value());
  const PropertyReport p = classify(*w2->connection);
  EXPECT_TRUE(p.essential.holds && p.retractable.holds && !p.uc.holds);

  const auto w3 = find_witness(parse_query("cyclically_essential & !essential"), 7);
  ASSERT_TRUE(w3.has_value());

  EXPECT_FALSE(find_witness(parse_query("essential & !essential"), 4).has_value());
  EXPECT_THROW(find_witness(parse_query("essential"), 8), Error);
}

TEST(Search, WitnessIsMinimal) {
  const PropertyQuery q = parse_query("modular & !distributive");
  const auto w = find_witness(q, 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->lattice->size(), 5u);
  for (std::size_t n = 2; n < 5; ++n) {
    for (const auto& l : enumerate_lattices(n)) EXPECT_FALSE(evaluate(q, l));
  }
}

TEST(Search, TheoremSuiteSmall) {
  const SuiteReport r = run_theorem_suite(4);
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.clauses) EXPECT_EQ(c.failed, 0u) << c.name;
  EXPECT_GT(r.connections, 0u);
  EXPECT_THROW(run_theorem_suite(8), Error);
}

TEST(Search, TheoremSuiteSixExercisesCyclicClause) {
  const SuiteReport r = run_theorem_suite(6);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.all_exercised());
  const ClauseTally* c = r.find("udim-equal-cyclic");
  ASSERT_NE(c, nullptr);
  EXPECT_GT(c->tested, 0u);
}

TEST(Search, IdentityConnectionsPassEveryClause) {
  for (const auto& l : enumerate_lattices_up_to(6)) {
    const GaloisConnection g = identity_connection(l);
    const PropertyReport p = classify(g);
    EXPECT_TRUE(p.essential.holds && p.retractable.holds && p.uc.holds);
    EXPECT_FALSE(verify_udim_theorem(g).alarm());
    if (is_modular(*l)) {
      const CorrespondenceResult c = closed_correspondence(g, CorrespondenceMode::kModular);
      EXPECT_TRUE(c.verified);
      for (auto [a, b] : c.phi) EXPECT_EQ(a, b);
    }
  }
}

}  // namespace
}  // namespace latgal
