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

#include <numeric>

#include "fixtures.hpp"
#include "latgal/abelian.hpp"
#include "latgal/report.hpp"

namespace latgal {
namespace {

using testing::fixture_lattice;

FinAbGroup G(const char* s) { return FinAbGroup::parse(s); }

TEST(Abelian, GroupBasics) {
  const FinAbGroup g = G("2,4");
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(g.name(), "Z2xZ4");
  EXPECT_EQ(g.exponent(), 4u);
  for (Elem x = 0; x < g.size(); ++x) {
    EXPECT_EQ(g.add(x, g.neg(x)), 0u);
    EXPECT_EQ(g.encode({g.decode(x).begin(), g.decode(x).end()}), x);
    for (Elem y = 0; y < g.size(); ++y) EXPECT_EQ(g.add(x, y), g.add(y, x));
  }
  EXPECT_EQ(FinAbGroup::parse("0").size(), 1u);
  EXPECT_THROW(FinAbGroup::parse("2,x"), Error);
}

TEST(Abelian, SubgroupLattices) {
  const Lattice z = subgroup_lattice(G("2,4"));
  EXPECT_EQ(z.size(), 8u);
  EXPECT_TRUE(isomorphic(z, *fixture_lattice("z2z4")));
  const Lattice grid = subgroup_lattice(G("4,9"));
  EXPECT_EQ(grid.size(), 9u);
  EXPECT_TRUE(isomorphic(grid, *fixture_lattice("grid9")));
  EXPECT_EQ(subgroup_lattice(G("5")).size(), 2u);
  EXPECT_EQ(subgroup_lattice(G("2,2")).size(), 5u);  // M3
}

TEST(Abelian, SubgroupCountsMatchBruteForce) {
  // Every subset closed under addition, counted directly.
  for (const auto& g : abelian_groups_up_to(12)) {
    std::size_t count = 0;
    const std::size_t n = g.size();
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // contains 0
      bool closed = true;
      for (Elem x = 0; x < n && closed; ++x) {
        if (!(mask >> x & 1u)) continue;
        for (Elem y = 0; y < n && closed; ++y) {
          if ((mask >> y & 1u) && !(mask >> g.add(x, y) & 1u)) closed = false;
        }
      }
      count += closed;
    }
    EXPECT_EQ(subgroups(g).size(), count) << g.name();
  }
}

TEST(Abelian, HomGroups) {
  EXPECT_EQ(HomSpace(G("4"), G("4")).size(), 4u);
  EXPECT_EQ(HomSpace(G("2,4"), G("2,4")).size(), 32u);
  EXPECT_EQ(HomSpace(G("2"), G("3")).size(), 1u);
  for (const auto& m : abelian_groups_up_to(8)) {
    for (const auto& n : abelian_groups_up_to(8)) {
      std::size_t want = 1;
      for (auto a : m.orders()) {
        for (auto b : n.orders()) want *= std::gcd(a, b);
      }
      const HomSpace h(m, n);
      ASSERT_EQ(h.size(), want) << m.name() << " " << n.name();
      // Each element is a homomorphism.
      for (Elem u = 0; u < h.size(); ++u) {
        for (Elem x = 0; x < m.size(); ++x) {
          for (Elem y = 0; y < m.size(); ++y) {
            ASSERT_EQ(h.apply(u, m.add(x, y)), n.add(h.apply(u, x), h.apply(u, y)));
          }
        }
      }
    }
  }
}

TEST(Abelian, EndRingZeroAbsorbs) {
  const EndRing e = end_ring(G("2,4"));
  EXPECT_EQ(e.size(), 32u);
  for (Elem s = 0; s < e.size(); ++s) {
    EXPECT_EQ(e.mul(s, 0), 0u);
    EXPECT_EQ(e.mul(0, s), 0u);
    EXPECT_EQ(e.mul(s, e.identity), s);
  }
}

TEST(Abelian, AnnihilatorBoundaryValues) {
  const ModulePair z4(G("4"), G("4"));
  const Bits all_m = z4.lattice_M().members.back().elements;
  EXPECT_EQ(z4.l_U(all_m).count(), 1u);
  Bits zero_u(z4.U().size());
  zero_u.set(0);
  EXPECT_EQ(z4.r_M(zero_u), all_m);
  EXPECT_EQ(z4.r_prime_N(zero_u).count(), 1u);
  EXPECT_EQ(z4.l_prime_U(z4.lattice_N().members.back().elements).count(), z4.U().size());
  EXPECT_EQ(z4.T_lattice().lattice->size(), 3u);
  EXPECT_EQ(z4.S_lattice().lattice->size(), 3u);

  const ModulePair z(G("2,4"), G("2,4"));
  // r'_N(U) = N since the identity is in U.
  Bits all_u(z.U().size());
  for (Elem u = 0; u < z.U().size(); ++u) all_u.set(u);
  EXPECT_EQ(z.r_prime_N(all_u).count(), 8u);
  for (const auto& x : z.lattice_M().members) {
    EXPECT_TRUE(x.elements.subset_of(z.r_M(z.l_U(x.elements))));
  }
}

TEST(Abelian, ModuleConnectionsOnZ4AndZ2xZ4) {
  for (const char* spec : {"4", "2,4"}) {
    const ModulePair p(G(spec), G(spec));
    const GaloisConnection rm = p.connection_rm_lu();
    const GaloisConnection rn = p.connection_rn_lu();
    EXPECT_EQ(p.is_retractable_module(), classify(rn).retractable.holds);
    EXPECT_EQ(p.is_coretractable_module(), classify(rm).retractable.holds);
    EXPECT_TRUE(classify(rn).beta_additive.holds);
    EXPECT_TRUE(classify(rm).beta_additive.holds);
  }
  const ModulePair z4(G("4"), G("4"));
  EXPECT_TRUE(z4.is_retractable_module());
  EXPECT_TRUE(z4.is_semi_projective());
  EXPECT_TRUE(z4.is_semi_injective());
}

TEST(Abelian, ZeroHom) {
  const ModulePair p(G("2"), G("3"));
  EXPECT_EQ(p.U().size(), 1u);
  EXPECT_EQ(p.T_lattice().lattice->size(), 1u);
  EXPECT_FALSE(p.is_retractable_module());
  EXPECT_FALSE(p.is_coretractable_module());
  EXPECT_NO_THROW(p.connection_rm_lu());
}

// Every pair of groups of order at most 8: module predicates match the
// connection flags, both constructions agree, and no check alarms.
TEST(Abelian, SweepUpToOrderEight) {
  std::size_t semi_projective = 0, retractable = 0;
  for (const auto& m : abelian_groups_up_to(8)) {
    for (const auto& n : abelian_groups_up_to(8)) {
      const ModulePair p(m, n);
      ASSERT_EQ(p.is_retractable_module(), p.is_retractable_module_by_images());
      ASSERT_EQ(p.is_coretractable_module(), p.is_coretractable_module_by_kernels());
      const ModuleReport r = module_report(p);
      ASSERT_FALSE(r.alarm()) << r.json.dump();
      semi_projective += p.is_semi_projective();
      retractable += p.is_retractable_module();
    }
  }
  EXPECT_GT(semi_projective, 0u);
  EXPECT_GT(retractable, 0u);
}

}  // namespace
}  // namespace latgal
