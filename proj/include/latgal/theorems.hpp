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

#pragma once

// Exhaustive sweep of the essentiality and Galois-connection statements over
// every lattice up to a size bound and every adjoint pair between them.
// A clause counts the instances whose hypotheses held and those whose
// conclusion failed; any failure is a bug. Observations count instances of
// known non-theorems and never fail.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/essentiality.hpp"
#include "latgal/galois.hpp"
#include "latgal/io.hpp"
#include "latgal/lattice.hpp"
#include "latgal/search.hpp"

namespace latgal {

struct ClauseTally {
  std::string name;
  std::string statement;
  std::size_t tested = 0;
  std::size_t failed = 0;
  std::vector<std::string> reproducers;
};

struct SuiteReport {
  std::size_t max_n = 0;
  std::size_t lattices = 0;
  std::size_t lattice_pairs = 0;
  std::size_t connections = 0;
  double seconds = 0;
  std::vector<ClauseTally> clauses;
  std::vector<ClauseTally> observations;

  bool ok() const {
    for (const auto& c : clauses) {
      if (c.failed) return false;
    }
    return true;
  }
  bool all_exercised() const {
    for (const auto& c : clauses) {
      if (!c.tested) return false;
    }
    return true;
  }
  const ClauseTally* find(const std::string& name) const {
    for (const auto& c : clauses) {
      if (c.name == name) return &c;
    }
    for (const auto& c : observations) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

struct SuiteOptions {
  std::size_t max_n = 5;
  // Reproducer files for failing instances go here when set.
  std::optional<std::filesystem::path> reproducer_dir;
  std::size_t max_reproducers_per_clause = 3;
};

namespace detail {

class Tallies {
 public:
  explicit Tallies(const SuiteOptions& opt) : opt_(opt) {}

  void declare(const std::string& name, const std::string& statement,
               bool observation = false) {
    auto& v = observation ? observations_ : clauses_;
    index_[name] = {observation, v.size()};
    v.push_back({name, statement, 0, 0, {}});
  }

  ClauseTally& at(const std::string& name) {
    auto [obs, i] = index_.at(name);
    return obs ? observations_[i] : clauses_[i];
  }

  // One instance whose hypotheses held.
  void check(const std::string& name, bool pass, const Lattice& l) {
    ClauseTally& t = at(name);
    ++t.tested;
    if (!pass) {
      ++t.failed;
      dump(t, [&](const std::filesystem::path& dir) {
        write(dir / "L.lat", print_lattice(l));
      });
    }
  }
  void check(const std::string& name, bool pass, const GaloisConnection& g) {
    ClauseTally& t = at(name);
    ++t.tested;
    if (!pass) {
      ++t.failed;
      dump(t, [&](const std::filesystem::path& dir) { write_connection(dir, g); });
    }
  }
  void observe(const std::string& name, bool seen) {
    ClauseTally& t = at(name);
    ++t.tested;
    if (seen) ++t.failed;
  }

  std::vector<ClauseTally> clauses() const { return clauses_; }
  std::vector<ClauseTally> observations() const { return observations_; }

 private:
  static void write(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
  }
  static void write_connection(const std::filesystem::path& dir, const GaloisConnection& g) {
    write(dir / "A.lat", print_lattice(g.A()));
    write(dir / "B.lat", print_lattice(g.B()));
    write(dir / "alpha.map", print_map(g.alpha_map(), "alpha", "A.lat", "B.lat"));
    write(dir / "beta.map", print_map(g.beta_map(), "beta", "B.lat", "A.lat"));
  }
  template <typename F>
  void dump(ClauseTally& t, F&& writer) {
    if (!opt_.reproducer_dir || t.reproducers.size() >= opt_.max_reproducers_per_clause) {
      return;
    }
    const auto dir = *opt_.reproducer_dir / (t.name + "-" + std::to_string(t.reproducers.size()));
    std::filesystem::create_directories(dir);
    writer(dir);
    t.reproducers.push_back(dir.string());
  }

  const SuiteOptions& opt_;
  std::vector<ClauseTally> clauses_, observations_;
  std::map<std::string, std::pair<bool, std::size_t>> index_;
};

// Per-lattice data reused across every connection touching the lattice.
struct LatticeFacts {
  LatticePtr lattice;
  EssentialityTable table;
  bool modular;
  bool cyclically_generated;
  bool uniform;
  bool uc;
  ElemSet cyclic;

  explicit LatticeFacts(LatticePtr l)
      : lattice(l),
        table(*l),
        modular(is_modular(*l)),
        cyclically_generated(is_cyclically_generated(*l)),
        uniform(is_uniform(*l)),
        uc(table.uc()),
        cyclic(cyclic_elements(*l)) {}
};

inline void lattice_clauses(Tallies& t, const LatticeFacts& f) {
  const Lattice& l = *f.lattice;
  const auto& tb = f.table;
  const std::size_t n = l.size();

  {
    bool trans = true, down = true;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (l.leq(a, b) && l.leq(b, c)) {
            if (tb.essential(a, c) != (tb.essential(a, b) && tb.essential(b, c))) trans = false;
          }
          if (tb.essential(a, c) && l.leq(b, c) && !tb.essential(l.meet(a, b), b)) down = false;
        }
      }
    }
    t.check("essential-transitivity", trans, l);
    t.check("essential-meet-restriction", down, l);
  }
  if (f.cyclically_generated) {
    bool ok = true;
    for (Elem a = 0; a < n; ++a) {
      if (essential_via_cyclic(l, a) != tb.essential(a, l.top())) ok = false;
    }
    t.check("cyclic-essential-test", ok, l);
  }
  if (f.modular) {
    bool complements = true, exists = true;
    for (Elem a = 0; a < n; ++a) {
      for (Elem c : complements_of(l, a)) complements = complements && tb.closed(c);
      exists = exists && !tb.closures(a).empty();
    }
    t.check("complements-closed", complements, l);
    t.check("closure-exists", exists, l);
    if (f.uc) {
      bool mono = true;
      for (Elem a1 = 0; a1 < n; ++a1) {
        for (Elem a2 = 0; a2 < n; ++a2) {
          if (l.leq(a1, a2) && !l.leq(tb.closures(a1).front(), tb.closures(a2).front())) {
            mono = false;
          }
        }
      }
      t.check("closure-monotone", mono, l);
    }
    // Every ordering of every independent-candidate set, against the
    // definition.
    bool agree = true;
    std::vector<Elem> nonzero;
    for (Elem a = 0; a < n; ++a) {
      if (a != l.bottom()) nonzero.push_back(a);
    }
    const std::size_t k = std::min<std::size_t>(nonzero.size(), 4);
    for (std::uint32_t mask = 1; mask < (1u << nonzero.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
      std::vector<Elem> ys;
      for (std::size_t i = 0; i < nonzero.size(); ++i) {
        if (mask >> i & 1u) ys.push_back(nonzero[i]);
      }
      const bool full = is_join_independent(l, ys);
      do {
        if (join_independent_incremental(l, ys) != full) agree = false;
      } while (std::next_permutation(ys.begin(), ys.end()));
    }
    t.check("incremental-independence", agree, l);
    const bool by_complements = extending_by_complements(l);
    const bool by_closed = extending_by_closed(l);
    t.check("extending-forms-agree", by_complements == by_closed, l);
  }
  if (is_distributive(l)) t.check("distributive-implies-modular", f.modular, l);
  t.check("uniform-iff-udim-one", f.uniform == (uniform_dimension(l).value == 1), l);
  {
    const Lattice dd = dual(dual(l));
    bool same = dd.size() == n;
    for (Elem a = 0; a < n && same; ++a) {
      same = dd.label(a) == l.label(a);
      for (Elem b = 0; b < n && same; ++b) same = dd.leq(a, b) == l.leq(a, b);
    }
    t.check("dual-involution", same, l);
    t.check("hollow-is-dual-udim",
            hollow_dimension(l).value == uniform_dimension(dual(l)).value, l);
  }
}

inline void connection_clauses(Tallies& t, const GaloisConnection& g,
                               const LatticeFacts& fa, const LatticeFacts& fb) {
  const Lattice& A = g.A();
  const Lattice& B = g.B();
  const auto& ta = fa.table;
  const auto& tb = fb.table;
  const Elem a0 = A.bottom(), a1 = A.top(), b0 = B.bottom(), b1 = B.top();

  PropertyReport p;
  bool dual_ok = true;
  try {
    p = classify(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTheoremViolation) throw;
    dual_ok = false;
    p = classify_unverified(g.alpha_map(), g.beta_map());
  }
  t.check("dual-flags-agree", dual_ok, g);

  // Adjunction basics.
  {
    bool unit = true, triple = true, joins = true, meets = true;
    for (Elem a = 0; a < A.size(); ++a) {
      unit = unit && A.leq(a, g.beta_alpha(a));
      triple = triple && g.alpha(g.beta_alpha(a)) == g.alpha(a);
      for (Elem a2 = 0; a2 < A.size(); ++a2) {
        joins = joins && g.alpha(A.join(a, a2)) == B.join(g.alpha(a), g.alpha(a2));
      }
    }
    for (Elem b = 0; b < B.size(); ++b) {
      unit = unit && B.leq(g.alpha_beta(b), b);
      triple = triple && g.beta(g.alpha_beta(b)) == g.beta(b);
      for (Elem b2 = 0; b2 < B.size(); ++b2) {
        meets = meets && g.beta(B.meet(b, b2)) == A.meet(g.beta(b), g.beta(b2));
      }
    }
    t.check("unit-counit", unit, g);
    t.check("triple-composites", triple, g);
    t.check("alpha-preserves-joins", joins, g);
    t.check("beta-preserves-meets", meets, g);
    t.check("bounds-preserved", g.alpha(a0) == b0 && g.beta(b1) == a1, g);
    const auto [ga, gb] = galois_elements(g);
    bool bij = ga.size() == gb.size();
    for (Elem a : ga) bij = bij && detail::contains(gb, g.alpha(a)) && g.beta(g.alpha(a)) == a;
    for (Elem b : gb) bij = bij && detail::contains(ga, g.beta(b)) && g.alpha(g.beta(b)) == b;
    t.check("galois-elements-biject", bij, g);
    const GaloisConnection dd = dual_connection(dual_connection(g));
    t.check("dual-connection-involution",
            dd.alpha_map().table == g.alpha_map().table &&
                dd.beta_map().table == g.beta_map().table,
            g);
  }

  const bool ess = p.essential.holds;
  const bool cyc = p.cyclically_essential.holds;
  const bool ret = p.retractable.holds;
  const bool bbot = p.beta_bottom.holds;
  bool kernel = true;
  for (Elem b = 0; b < B.size(); ++b) {
    if (g.beta(b) == a0 && b != b0) kernel = false;
  }

  if (ess) {
    bool ok = bbot;
    for (Elem a : ta.closed_elements()) ok = ok && g.beta_alpha(a) == a;
    t.check("essential-closed-are-galois", ok, g);
  }
  if (ret) t.check("retractable-kernel-trivial", kernel, g);
  if (kernel && bbot) t.check("kernel-trivial-retractable", ret, g);
  if (kernel && !bbot) t.observe("kernel-trivial-without-beta-zero-not-retractable", !ret);

  auto disjoint_images = [&](bool cyclic_only) {
    const ElemSet& dom = fa.cyclic;
    for (Elem a = 0; a < A.size(); ++a) {
      if (cyclic_only && !detail::contains(dom, a)) continue;
      for (Elem a2 = 0; a2 < A.size(); ++a2) {
        if (cyclic_only && !detail::contains(dom, a2)) continue;
        if (A.meet(a, a2) == a0 && B.meet(g.alpha(a), g.alpha(a2)) != b0) return false;
      }
    }
    return true;
  };
  if (ess && ret) t.check("disjoint-images", disjoint_images(false), g);
  if (cyc && ret) t.check("disjoint-images-cyclic", disjoint_images(true), g);
  if (ess && ret && p.alpha_top.holds) {
    bool ok = true;
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem c : complements_of(A, a)) ok = ok && B.meet(g.alpha(a), g.alpha(c)) == b0 &&
                                                B.join(g.alpha(a), g.alpha(c)) == b1;
    }
    t.check("complements-preserved", ok, g);
  }

  if (ret && bbot) {
    bool i = true, ii = true;
    for (Elem b = 0; b < B.size(); ++b) {
      for (Elem b2 = 0; b2 < B.size(); ++b2) {
        if (ta.essential(g.beta(b), g.beta(b2)) && !tb.essential(B.meet(b, b2), b2)) i = false;
      }
    }
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem a2 = 0; a2 < A.size(); ++a2) {
        if (ta.essential(a, a2) && g.beta_alpha(a2) == a2 &&
            !tb.essential(g.alpha(a), g.alpha(a2))) {
          ii = false;
        }
      }
    }
    t.check("essential-pullback-along-beta", i, g);
    t.check("essential-at-galois-along-alpha", ii, g);

    auto beta_preserves = [&] {
      for (Elem b = 0; b < B.size(); ++b) {
        for (Elem b2 = 0; b2 < B.size(); ++b2) {
          if (tb.essential(b, b2) && !ta.essential(g.beta(b), g.beta(b2))) return false;
        }
      }
      return true;
    };
    auto alpha_reflects = [&](bool cyclic_only) {
      for (Elem a = 0; a < A.size(); ++a) {
        if (cyclic_only && !detail::contains(fa.cyclic, a)) continue;
        for (Elem a2 = 0; a2 < A.size(); ++a2) {
          if (tb.essential(g.alpha(a), g.alpha(a2)) && !ta.essential(A.meet(a, a2), a2)) {
            return false;
          }
        }
      }
      return true;
    };
    if (ess) {
      t.check("beta-preserves-essential", beta_preserves(), g);
      t.check("alpha-reflects-essential", alpha_reflects(false), g);
    }
    if (cyc && fa.cyclically_generated) {
      t.check("beta-preserves-essential-cyclic", beta_preserves(), g);
      t.check("alpha-reflects-essential-cyclic", alpha_reflects(true), g);
    }
  }

  if (p.beta_additive.holds && bbot) {
    bool ok = true;
    for (Elem b = 0; b < B.size(); ++b) {
      for (Elem c : complements_of(B, b)) {
        ok = ok && A.meet(g.beta(b), g.beta(c)) == a0 && A.join(g.beta(b), g.beta(c)) == a1;
      }
    }
    t.check("additive-beta-preserves-complements", ok, g);
  }

  // Uniform dimension.
  if (fa.modular && fb.modular && ret && bbot) {
    const UdimReport u = verify_udim_theorem(g);
    t.check("udim-bound", u.bound.applied && u.bound.pass, g);
    if (u.essential_equal.applied) t.check("udim-equal-essential", u.essential_equal.pass, g);
    if (u.cyclic_equal.applied) t.check("udim-equal-cyclic", u.cyclic_equal.pass, g);
  }

  // Closed-element correspondences.
  if (ess && ret && p.uc.holds) {
    const CorrespondenceResult c = closed_correspondence(g, CorrespondenceMode::kGeneral);
    t.check("correspondence-general", c.hypotheses_met && c.verified, g);
    if (fa.modular && fb.modular) {
      const CorrespondenceResult m = closed_correspondence(g, CorrespondenceMode::kModular);
      t.check("correspondence-modular", m.hypotheses_met && m.verified, g);
      if (fb.uc) t.check("correspondence-order", m.order_preserving.value_or(false), g);
      bool agree = true;
      try {
        agree = evaluate_restriction_equivalence(g).agree();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kTheoremViolation) throw;
        agree = false;
      }
      t.check("restriction-iff-closed-galois", agree, g);
      const ExtendingReport x = verify_extending_transfer(g);
      if (x.to_domain.applied) t.check("extending-to-domain", x.to_domain.pass, g);
      if (x.to_codomain.applied) t.check("extending-to-codomain", x.to_codomain.pass, g);
      bool closed_not_galois = false;
      for (Elem b : tb.closed_elements()) {
        if (g.alpha_beta(b) != b) closed_not_galois = true;
      }
      t.observe("closed-not-galois-in-codomain", closed_not_galois);
    }
  }
  if (p.coessential.holds && p.coretractable.holds && p.ucc.holds && fa.modular &&
      fb.modular && is_amply_supplemented_small_overlap(A)) {
    const DualCorrespondenceReport d = verify_dual_correspondence(g);
    t.check("coclosed-correspondence", d.hypotheses_met && d.verified, g);
  }

  // Transfer from uniform or UC sides, with the side conditions the short
  // arguments need; the unqualified forms are only observed.
  if (fa.uniform && bbot) t.check("uniform-domain-essential", ess, g);
  if (fb.uniform && kernel && bbot) t.check("uniform-codomain-retractable", ret, g);
  if (fb.uc && ret) t.check("uc-codomain-uc", p.uc.holds, g);
  if (fa.uniform) t.observe("uniform-domain-not-essential", !ess);
  if (fb.uniform) t.observe("uniform-codomain-not-retractable", !ret);
  if (fb.uc) t.observe("uc-codomain-not-uc", !p.uc.holds);
  {
    bool galois_not_closed = false;
    for (Elem a = 0; a < A.size(); ++a) {
      if (g.beta_alpha(a) == a && !ta.closed(a)) galois_not_closed = true;
    }
    t.observe("galois-not-closed-in-domain", galois_not_closed);
  }
}

inline void declare_all(Tallies& t) {
  t.declare("essential-transitivity",
            "a <= b <= c: a ess in [0,c] iff a ess in [0,b] and b ess in [0,c]");
  t.declare("essential-meet-restriction", "a ess in [0,c], b <= c => a^b ess in [0,b]");
  t.declare("cyclic-essential-test",
            "cyclically generated: a essential iff it meets every nonzero cyclic element");
  t.declare("complements-closed", "modular: every complement is closed");
  t.declare("closure-exists", "modular: every element has a closure");
  t.declare("closure-monotone", "modular UC: a1 <= a2 => closure(a1) <= closure(a2)");
  t.declare("incremental-independence",
            "modular: incremental and full join-independence agree for every ordering");
  t.declare("extending-forms-agree",
            "modular: 'each a essential in a complement' iff 'closed elements are complements'");
  t.declare("distributive-implies-modular", "distributive => modular");
  t.declare("uniform-iff-udim-one", "uniform iff udim = 1");
  t.declare("dual-involution", "dual(dual(L)) = L elementwise");
  t.declare("hollow-is-dual-udim", "hdim(L) = udim(dual L)");

  t.declare("dual-flags-agree",
            "coessential/coretractable/UCC via the dual connection = direct definitions");
  t.declare("unit-counit", "a <= beta alpha(a), alpha beta(b) <= b");
  t.declare("triple-composites", "alpha beta alpha = alpha, beta alpha beta = beta");
  t.declare("alpha-preserves-joins", "alpha(a v a') = alpha(a) v alpha(a')");
  t.declare("beta-preserves-meets", "beta(b ^ b') = beta(b) ^ beta(b')");
  t.declare("bounds-preserved", "alpha(0) = 0, beta(1) = 1");
  t.declare("galois-elements-biject", "alpha, beta restrict to inverse bijections of fixed points");
  t.declare("dual-connection-involution", "dual of the dual connection is the connection");
  t.declare("essential-closed-are-galois",
            "essential => closed elements of A are Galois and beta(0) = 0");
  t.declare("retractable-kernel-trivial", "retractable => (beta(b) = 0 => b = 0)");
  t.declare("kernel-trivial-retractable",
            "beta(0) = 0 and (beta(b) = 0 => b = 0) => retractable");
  t.declare("disjoint-images", "essential retractable: a ^ a' = 0 => alpha(a) ^ alpha(a') = 0");
  t.declare("disjoint-images-cyclic",
            "cyclically essential retractable: same for cyclic a, a'");
  t.declare("complements-preserved",
            "essential retractable, alpha(1) = 1 => alpha preserves complements");
  t.declare("essential-pullback-along-beta",
            "retractable, beta(0) = 0: beta(b) ess in [0,beta(b')] => b ^ b' ess in [0,b']");
  t.declare("essential-at-galois-along-alpha",
            "retractable, beta(0) = 0: a ess in [0,a'], a' Galois => alpha(a) ess in [0,alpha(a')]");
  t.declare("beta-preserves-essential",
            "retractable essential, beta(0) = 0: b ess in [0,b'] => beta(b) ess in [0,beta(b')]");
  t.declare("alpha-reflects-essential",
            "retractable essential, beta(0) = 0: alpha(a) ess in [0,alpha(a')] => a ^ a' ess in [0,a']");
  t.declare("beta-preserves-essential-cyclic",
            "as above for cyclically essential connections on cyclically generated A");
  t.declare("alpha-reflects-essential-cyclic",
            "as above for cyclic a, cyclically essential, cyclically generated A");
  t.declare("additive-beta-preserves-complements",
            "beta additive, beta(0) = 0 => beta preserves complements");
  t.declare("udim-bound", "retractable, beta(0) = 0, modular: udim(B) <= udim(A)");
  t.declare("udim-equal-essential", "... and essential => udim(A) = udim(B)");
  t.declare("udim-equal-cyclic",
            "... and A cyclically generated, cyclically essential, beta additive => equal");
  t.declare("correspondence-general",
            "essential retractable UC: psi defined iff coincidence; then phi, psi inverse");
  t.declare("correspondence-modular",
            "... modular: all closed elements correspond, psi = beta");
  t.declare("correspondence-order", "... and B UC => bijections order-preserving");
  t.declare("restriction-iff-closed-galois",
            "bijections are restrictions of alpha, beta iff closed elements of B are Galois");
  t.declare("extending-to-domain", "beta additive: B extending => A extending");
  t.declare("extending-to-codomain", "alpha(1) = 1: A extending => B extending");
  t.declare("coclosed-correspondence",
            "coessential coretractable UCC, modular, A amply supplemented: coclosed bijection");
  t.declare("uniform-domain-essential", "A uniform, beta(0) = 0 => essential");
  t.declare("uniform-codomain-retractable", "B uniform, beta(0) = 0, trivial kernel => retractable");
  t.declare("uc-codomain-uc", "B UC, retractable => UC connection");

  t.declare("kernel-trivial-without-beta-zero-not-retractable",
            "trivial kernel but beta(0) != 0 and not retractable", true);
  t.declare("uniform-domain-not-essential", "A uniform but not essential", true);
  t.declare("uniform-codomain-not-retractable", "B uniform but not retractable", true);
  t.declare("uc-codomain-not-uc", "B UC but connection not UC", true);
  t.declare("closed-not-galois-in-codomain",
            "essential retractable UC with a closed, non-Galois element of B", true);
  t.declare("galois-not-closed-in-domain", "a Galois element of A that is not closed", true);
}

}  // namespace detail

// Runs every clause on all lattices with 2..max_n elements and on all adjoint
// pairs between them (including the trivially verified identity connections).
inline SuiteReport run_theorem_suite(const SuiteOptions& opt) {
  if (opt.max_n < 2 || opt.max_n > 7) {
    throw Error(ErrorKind::kBoundExceeded, "theorem suite supports 2 <= max_n <= 7");
  }
  const auto start = std::chrono::steady_clock::now();
  detail::Tallies t(opt);
  detail::declare_all(t);
  SuiteReport r;
  r.max_n = opt.max_n;
  std::vector<detail::LatticeFacts> facts;
  for (const auto& l : enumerate_lattices_up_to(opt.max_n)) facts.emplace_back(l);
  r.lattices = facts.size();
  for (const auto& f : facts) detail::lattice_clauses(t, f);
  for (const auto& fa : facts) {
    for (const auto& fb : facts) {
      ++r.lattice_pairs;
      r.connections += for_each_connection(fa.lattice, fb.lattice, [&](const GaloisConnection& g) {
        detail::connection_clauses(t, g, fa, fb);
        return true;
      });
    }
  }
  r.clauses = t.clauses();
  r.observations = t.observations();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline SuiteReport run_theorem_suite(std::size_t max_n) {
  SuiteOptions opt;
  opt.max_n = max_n;
  return run_theorem_suite(opt);
}

}  // namespace latgal
