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
#include "latgal/galois.hpp"
#include "latgal/search.hpp"
#include "oracles.hpp"

namespace latgal {
namespace {

using namespace latgal::testing;

MonotoneMap fixture_map(const std::string& stem, const LatticePtr& src, const LatticePtr& dst) {
  return resolve_map(read_map_file(fixture_path(stem + ".map")), src, dst);
}

ElemSet labels(const Lattice& l, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return labels_to_set(l, v);
}

TEST(Galois, GridTablesAreAdjoint) {
  const GaloisConnection g = grid9_connection();
  const Lattice& A = g.A();
  EXPECT_EQ(A.label(g.alpha(A.at("H7"))), "H4");
  EXPECT_EQ(A.label(g.beta(A.at("H2"))), "H5");
  const auto [ga, gb] = galois_elements(g);
  EXPECT_EQ(ga, labels(A, {"0", "H3", "H5", "G"}));
  EXPECT_EQ(gb, labels(A, {"0", "H1", "H2", "H4"}));
}

TEST(Galois, GridClassification) {
  const GaloisConnection g = grid9_connection();
  const PropertyReport p = classify(g);
  EXPECT_TRUE(p.essential.holds);
  EXPECT_TRUE(p.retractable.holds);
  EXPECT_TRUE(p.uc.holds);
  EXPECT_TRUE(p.beta_bottom.holds);
  // H3 is closed in B but not a Galois element there.
  const auto [ga, gb] = galois_elements(g);
  EXPECT_TRUE(detail::contains(closed_elements(g.B()), g.B().at("H3")));
  EXPECT_FALSE(detail::contains(gb, g.B().at("H3")));
  // Coretractability both ways.
  EXPECT_EQ(p.coretractable.holds, classify(dual_connection(g)).retractable.holds);
}

TEST(Galois, GridTheorems) {
  const GaloisConnection g = grid9_connection();
  const UdimReport u = verify_udim_theorem(g);
  ASSERT_TRUE(u.hypotheses_met);
  EXPECT_EQ(u.udim_a.value, 2u);
  EXPECT_EQ(u.udim_b.value, 2u);
  EXPECT_TRUE(u.bound.applied && u.bound.pass);
  EXPECT_TRUE(u.essential_equal.applied && u.essential_equal.pass);
  EXPECT_FALSE(u.alarm());

  const CorrespondenceResult c = closed_correspondence(g, CorrespondenceMode::kModular);
  ASSERT_TRUE(c.hypotheses_met);
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.domain_set, labels(g.A(), {"0", "H3", "H5", "G"}));
  EXPECT_EQ(c.codomain_set, labels(g.B(), {"0", "H3", "H5", "G"}));
  for (auto [a, b] : c.phi) EXPECT_EQ(a, b);
  EXPECT_EQ(c.order_preserving, std::optional<bool>(true));
  EXPECT_TRUE(closed_correspondence(g, CorrespondenceMode::kGeneral).verified);

  // The bijections are not the restrictions of alpha and beta: H3 is closed
  // in B but not Galois.
  const RestrictionEquivalence r = evaluate_restriction_equivalence(g);
  EXPECT_TRUE(r.agree());
  EXPECT_FALSE(closed_galois_equivalence(g));

  const ExtendingReport x = verify_extending_transfer(g);
  ASSERT_TRUE(x.hypotheses_met);
  EXPECT_TRUE(x.a_extending && x.b_extending);
  EXPECT_FALSE(x.alarm());
}

TEST(Galois, Z2xZ4TablesAreNotAdjoint) {
  const LatticePtr z = fixture_lattice("z2z4");
  const MonotoneMap al = fixture_map("z2z4_alpha", z, z);
  const MonotoneMap be = fixture_map("z2z4_beta", z, z);
  EXPECT_THROW(build_connection(al, be), Error);
  // Definitionally the tables still give the claimed profile.
  const PropertyReport p = classify_unverified(al, be);
  EXPECT_TRUE(p.essential.holds);
  EXPECT_TRUE(p.retractable.holds);
  EXPECT_FALSE(p.uc.holds);
  EXPECT_EQ(p.uc.witness, labels(*z, {"H6"}));
}

TEST(Galois, IdentityOnZ2xZ4) {
  const GaloisConnection g = z2z4_identity();
  const PropertyReport p = classify(g);
  EXPECT_TRUE(p.essential.holds && p.retractable.holds && p.uc.holds);
  const auto [ga, gb] = galois_elements(g);
  EXPECT_EQ(ga.size(), g.A().size());
  EXPECT_EQ(gb.size(), g.B().size());
  EXPECT_TRUE(closed_galois_equivalence(g));
}

TEST(Galois, NeitherEssentialNorRetractableNorUC) {
  const GaloisConnection g = ab1_connection();
  const Lattice& A = g.A();
  const Lattice& B = g.B();
  const PropertyReport p = classify(g);
  EXPECT_EQ(p.essential.witness, labels(A, {"a3"}));
  EXPECT_EQ(p.retractable.witness, labels(B, {"b2"}));
  EXPECT_EQ(p.uc.witness, labels(B, {"b5"}));
  EXPECT_EQ(closures_of(B, g.alpha_beta(B.at("b5"))).closures, labels(B, {"b5", "b6"}));

  // a4 is Galois but not closed.
  const Elem a4 = A.at("a4");
  EXPECT_EQ(g.beta_alpha(a4), a4);
  EXPECT_FALSE(is_closed(A, a4));

  // alpha and beta do not preserve essentiality.
  EXPECT_TRUE(is_essential_in(A, a4, A.at("a6")));
  EXPECT_EQ(g.alpha(a4), B.at("b1"));
  EXPECT_EQ(g.alpha(A.at("a6")), B.top());
  EXPECT_FALSE(is_essential_in(B, B.at("b1"), B.top()));
  EXPECT_TRUE(is_essential_in(B, B.at("b2"), B.at("b4")));
  EXPECT_EQ(g.beta(B.at("b2")), A.bottom());
  EXPECT_EQ(g.beta(B.at("b4")), A.at("a2"));
  EXPECT_FALSE(is_essential_in(A, A.bottom(), A.at("a2")));
}

TEST(Galois, RetractableButNotEssential) {
  const GaloisConnection g = ab2_connection();
  const PropertyReport p = classify(g);
  EXPECT_TRUE(p.retractable.holds);
  EXPECT_FALSE(p.essential.holds);
  EXPECT_FALSE(p.uc.holds);
}

TEST(Galois, CyclicallyEssentialTablesOnC) {
  const LatticePtr c = fixture_lattice("latC");
  const MonotoneMap al = fixture_map("cc_alpha", c, c);
  const MonotoneMap be = fixture_map("cc_beta", c, c);
  EXPECT_THROW(build_connection(al, be), Error);
  const PropertyReport p = classify_unverified(al, be);
  EXPECT_TRUE(p.cyclically_essential.holds);
  EXPECT_FALSE(p.essential.holds);
  EXPECT_EQ(p.essential.witness, labels(*c, {"c5"}));
}

TEST(Galois, ConstantPairAlwaysAdjoint) {
  for (const auto& a : enumerate_lattices_up_to(5)) {
    for (const auto& b : enumerate_lattices_up_to(5)) {
      MonotoneMap al{a, b, std::vector<Elem>(a->size(), b->bottom())};
      MonotoneMap be{b, a, std::vector<Elem>(b->size(), a->top())};
      const GaloisConnection g = build_connection(al, be);
      EXPECT_TRUE(classify(g).beta_additive.holds);
    }
  }
}

TEST(Galois, TwoChainConnections) {
  const auto two = share(enumerate_lattices(2).front());
  const auto all = enumerate_connections(two, two);
  ASSERT_EQ(all.size(), 2u);
}

TEST(Galois, DualConnectionIsInvolution) {
  const GaloisConnection g = grid9_connection();
  const GaloisConnection dd = dual_connection(dual_connection(g));
  EXPECT_EQ(dd.alpha_map().table, g.alpha_map().table);
  EXPECT_EQ(dd.beta_map().table, g.beta_map().table);
  EXPECT_TRUE(isomorphic(dd.A(), g.A()));
}

TEST(Galois, RejectsNonAdjointAndNonMonotone) {
  const LatticePtr g = fixture_lattice("grid9");
  MonotoneMap id = identity_map(g);
  MonotoneMap top{g, g, std::vector<Elem>(g->size(), g->top())};
  try {
    build_connection(id, top);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAdjoint);
  }
  MonotoneMap flip = id;
  std::swap(flip.table[g->bottom()], flip.table[g->top()]);
  try {
    build_connection(flip, id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotMonotone);
  }
}

// Library flags against the oracle for every adjoint pair at small sizes, and
// the enumerator against the all-pairs filter.
TEST(Galois, ClassificationMatchesOracle) {
  const auto lats = enumerate_lattices_up_to(5);
  for (const auto& a : lats) {
    for (const auto& b : lats) {
      const auto oa = oracle::Order::of(*a);
      const auto ob = oracle::Order::of(*b);
      auto want = oracle::all_adjoint_pairs(oa, ob);
      std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got;
      for (const auto& g : enumerate_connections(a, b)) {
        got.emplace_back(g.alpha_map().table, g.beta_map().table);
        const oracle::Pair op{oa, ob, g.alpha_map().table, g.beta_map().table};
        const PropertyReport p = classify(g);
        ASSERT_EQ(p.essential.holds, oracle::essential_pair(op, false));
        ASSERT_EQ(p.cyclically_essential.holds, oracle::essential_pair(op, true));
        ASSERT_EQ(p.retractable.holds, oracle::retractable_pair(op));
        ASSERT_EQ(p.uc.holds, oracle::uc_pair(op));
        // Dual flags via the flipped orders.
        const auto fa = oracle::Order::of(*a, true);
        const auto fb = oracle::Order::of(*b, true);
        const oracle::Pair dp{fb, fa, g.beta_map().table, g.alpha_map().table};
        ASSERT_EQ(p.coessential.holds, oracle::essential_pair(dp, false));
        ASSERT_EQ(p.coretractable.holds, oracle::retractable_pair(dp));
        ASSERT_EQ(p.ucc.holds, oracle::uc_pair(dp));
      }
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, want) << a->name() << " -> " << b->name();
    }
  }
}

TEST(Galois, AdjunctionLaws) {
  const auto lats = enumerate_lattices_up_to(5);
  for (const auto& a : lats) {
    for (const auto& b : lats) {
      for_each_connection(a, b, [&](const GaloisConnection& g) {
        for (Elem x = 0; x < a->size(); ++x) {
          EXPECT_TRUE(a->leq(x, g.beta_alpha(x)));
          EXPECT_EQ(g.alpha(g.beta_alpha(x)), g.alpha(x));
          for (Elem y = 0; y < a->size(); ++y) {
            EXPECT_EQ(g.alpha(a->join(x, y)), b->join(g.alpha(x), g.alpha(y)));
          }
        }
        for (Elem y = 0; y < b->size(); ++y) {
          EXPECT_TRUE(b->leq(g.alpha_beta(y), y));
          EXPECT_EQ(g.beta(g.alpha_beta(y)), g.beta(y));
        }
        EXPECT_EQ(g.alpha(a->bottom()), b->bottom());
        EXPECT_EQ(g.beta(b->top()), a->top());
        return !::testing::Test::HasFailure();
      });
    }
  }
}

}  // namespace
}  // namespace latgal
