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

// Monotone Galois connections (adjoint pairs) between finite lattices, their
// classification, and executable checks of the transfer results for uniform
// dimension, closed elements and the extending property.
//
// Verifiers distinguish "hypotheses not met" (neutral) from "conclusion
// failed under the hypotheses" (an alarm: the statements are theorems, so an
// alarm means a bug somewhere in this library).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/essentiality.hpp"
#include "latgal/lattice.hpp"

namespace latgal {

class GaloisConnection {
 public:
  // alpha : A -> B, beta : B -> A. Verifies monotonicity and the adjunction
  // alpha(a) <= b <=> a <= beta(b) over all |A|*|B| pairs.
  static GaloisConnection build(MonotoneMap alpha, MonotoneMap beta);

  const Lattice& A() const { return *alpha_.src; }
  const Lattice& B() const { return *alpha_.dst; }
  const LatticePtr& a_ptr() const { return alpha_.src; }
  const LatticePtr& b_ptr() const { return alpha_.dst; }
  const MonotoneMap& alpha_map() const { return alpha_; }
  const MonotoneMap& beta_map() const { return beta_; }

  Elem alpha(Elem a) const { return alpha_.table[a]; }
  Elem beta(Elem b) const { return beta_.table[b]; }
  Elem beta_alpha(Elem a) const { return beta(alpha(a)); }
  Elem alpha_beta(Elem b) const { return alpha(beta(b)); }

 private:
  GaloisConnection(MonotoneMap alpha, MonotoneMap beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  MonotoneMap alpha_;
  MonotoneMap beta_;
};

inline GaloisConnection GaloisConnection::build(MonotoneMap alpha,
                                                MonotoneMap beta) {
  if (!alpha.src || !alpha.dst || !beta.src || !beta.dst) {
    throw Error(ErrorKind::kInvalidArgument, "map without lattice");
  }
  auto same = [](const LatticePtr& x, const LatticePtr& y) {
    return x == y || *x == *y;
  };
  if (!same(alpha.src, beta.dst) || !same(alpha.dst, beta.src)) {
    throw Error(ErrorKind::kInvalidArgument,
                "alpha and beta do not run between the same two lattices");
  }
  beta.dst = alpha.src;
  beta.src = alpha.dst;
  if (!validate_monotone(alpha)) {
    throw Error(ErrorKind::kNotMonotone, "alpha is not order-preserving");
  }
  if (!validate_monotone(beta)) {
    throw Error(ErrorKind::kNotMonotone, "beta is not order-preserving");
  }
  const Lattice& A = *alpha.src;
  const Lattice& B = *alpha.dst;
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < B.size(); ++b) {
      if (B.leq(alpha.table[a], b) != A.leq(a, beta.table[b])) {
        throw Error(ErrorKind::kNotAdjoint,
                    "alpha(" + A.label(a) + ") <= " + B.label(b) +
                        " does not match " + A.label(a) + " <= beta(" +
                        B.label(b) + ")",
                    {a, b});
      }
    }
  }
  GaloisConnection g(std::move(alpha), std::move(beta));
  // Consequences of adjointness; failures here are internal errors.
  for (Elem a = 0; a < A.size(); ++a) {
    if (!A.leq(a, g.beta_alpha(a)) ||
        g.alpha(g.beta_alpha(a)) != g.alpha(a)) {
      throw Error(ErrorKind::kTheoremViolation, "unit law fails", {a});
    }
  }
  for (Elem b = 0; b < B.size(); ++b) {
    if (!B.leq(g.alpha_beta(b), b) || g.beta(g.alpha_beta(b)) != g.beta(b)) {
      throw Error(ErrorKind::kTheoremViolation, "counit law fails", {b});
    }
  }
  if (g.alpha(A.bottom()) != B.bottom() || g.beta(B.top()) != A.top()) {
    throw Error(ErrorKind::kTheoremViolation, "bounds are not preserved");
  }
  return g;
}

inline GaloisConnection build_connection(MonotoneMap alpha, MonotoneMap beta) {
  return GaloisConnection::build(std::move(alpha), std::move(beta));
}

inline GaloisConnection identity_connection(const LatticePtr& lattice) {
  return build_connection(identity_map(lattice), identity_map(lattice));
}

// Fixed points of beta.alpha on A and of alpha.beta on B.
inline std::pair<ElemSet, ElemSet> galois_elements(const GaloisConnection& g) {
  ElemSet on_a, on_b;
  for (Elem a = 0; a < g.A().size(); ++a) {
    if (g.beta_alpha(a) == a) on_a.push_back(a);
  }
  for (Elem b = 0; b < g.B().size(); ++b) {
    if (g.alpha_beta(b) == b) on_b.push_back(b);
  }
  return {on_a, on_b};
}

// (beta, alpha) between dual(B) and dual(A).
inline GaloisConnection dual_connection(const GaloisConnection& g) {
  LatticePtr a2 = share(dual(g.B()));
  LatticePtr b2 = share(dual(g.A()));
  return build_connection(MonotoneMap{a2, b2, g.beta_map().table},
                          MonotoneMap{b2, a2, g.alpha_map().table});
}

// A classification flag. `witness` names the least offending element (or
// pair, for additivity) when the flag is false.
struct Flag {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const { return holds; }
  friend bool operator==(const Flag&, const Flag&) = default;
};

struct PropertyReport {
  Flag essential;             // witness in A
  Flag cyclically_essential;  // witness in A
  Flag retractable;           // witness in B
  Flag uc;                    // witness in B
  Flag coessential;           // witness in B
  Flag coretractable;         // witness in A
  Flag ucc;                   // witness in A
  Flag beta_additive;         // witness pair in B
  Flag alpha_top;
  Flag beta_bottom;
};

namespace detail {

// Two lattices and two tables, not necessarily adjoint. The flags are
// definitional and make sense for any such pair.
struct PairView {
  const Lattice& A;
  const Lattice& B;
  const std::vector<Elem>& alpha;
  const std::vector<Elem>& beta;

  Elem beta_alpha(Elem a) const { return beta[alpha[a]]; }
  Elem alpha_beta(Elem b) const { return alpha[beta[b]]; }
};

inline PairView view(const GaloisConnection& g) {
  return {g.A(), g.B(), g.alpha_map().table, g.beta_map().table};
}

inline Flag fail_at(std::vector<Elem> w) { return {false, std::move(w)}; }

inline Flag essential_flag(const PairView& p, bool cyclic_only) {
  ElemSet domain = cyclic_only ? cyclic_elements(p.A) : p.A.elements();
  for (Elem a : domain) {
    if (!essential_below(p.A, a, p.beta_alpha(a))) return fail_at({a});
  }
  return {};
}

inline Flag retractable_by_definition(const PairView& p) {
  for (Elem b = 0; b < p.B.size(); ++b) {
    if (!essential_below(p.B, p.alpha_beta(b), b)) return fail_at({b});
  }
  return {};
}

// beta(b) = 0 only for b = 0.
inline bool kernel_trivial(const PairView& p) {
  for (Elem b = 0; b < p.B.size(); ++b) {
    if (b != p.B.bottom() && p.beta[b] == p.A.bottom()) return false;
  }
  return true;
}

// On an adjoint pair the kernel criterion follows from retractability, and
// implies it once beta(0) = 0. Without beta(0) = 0 it does not: the constant
// pair alpha = 0, beta = 1 meets the criterion vacuously.
inline Flag retractable_flag(const PairView& p) {
  Flag by_definition = retractable_by_definition(p);
  const bool kernel = kernel_trivial(p);
  const bool beta_bottom = p.beta[p.B.bottom()] == p.A.bottom();
  if ((by_definition.holds && !kernel) ||
      (beta_bottom && kernel && !by_definition.holds)) {
    throw Error(ErrorKind::kTheoremViolation,
                "retractability criteria disagree");
  }
  return by_definition;
}

inline Flag uc_flag(const PairView& p, const EssentialityTable& tb) {
  for (Elem b : tb.closed_elements()) {
    const ElemSet& c = tb.closures(p.alpha_beta(b));
    if (c.size() != 1 || c.front() != b) return fail_at({b});
  }
  return {};
}

inline Flag beta_additive_flag(const PairView& p) {
  for (Elem b = 0; b < p.B.size(); ++b) {
    for (Elem c = 0; c < p.B.size(); ++c) {
      if (p.B.meet(b, c) != p.B.bottom()) continue;
      if (p.beta[p.B.join(b, c)] != p.A.join(p.beta[b], p.beta[c])) {
        return fail_at({b, c});
      }
    }
  }
  return {};
}

// Direct forms of the dual properties.
inline Flag coessential_direct(const PairView& p) {
  const Lattice dB = dual(p.B);
  for (Elem b = 0; b < dB.size(); ++b) {
    if (!essential_below(dB, b, p.alpha_beta(b))) return fail_at({b});
  }
  return {};
}

inline Flag coretractable_direct(const PairView& p) {
  const Lattice dA = dual(p.A);
  for (Elem a = 0; a < dA.size(); ++a) {
    if (!essential_below(dA, p.beta_alpha(a), a)) return fail_at({a});
  }
  return {};
}

inline Flag ucc_direct(const PairView& p) {
  const EssentialityTable tda(dual(p.A));
  for (Elem a : tda.closed_elements()) {
    const ElemSet& c = tda.closures(p.beta_alpha(a));
    if (c.size() != 1 || c.front() != a) return fail_at({a});
  }
  return {};
}

inline PropertyReport primal_flags(const PairView& p) {
  PropertyReport r;
  r.essential = essential_flag(p, false);
  r.cyclically_essential = essential_flag(p, true);
  r.uc = uc_flag(p, EssentialityTable(p.B));
  r.beta_additive = beta_additive_flag(p);
  r.alpha_top = {p.alpha[p.A.top()] == p.B.top(), {}};
  r.beta_bottom = {p.beta[p.B.bottom()] == p.A.bottom(), {}};
  return r;
}

}  // namespace detail

inline bool is_essential_connection(const GaloisConnection& g) {
  return detail::essential_flag(detail::view(g), false).holds;
}
inline bool is_cyclically_essential_connection(const GaloisConnection& g) {
  return detail::essential_flag(detail::view(g), true).holds;
}
inline bool is_retractable_connection(const GaloisConnection& g) {
  return detail::retractable_flag(detail::view(g)).holds;
}
inline bool is_UC_connection(const GaloisConnection& g) {
  return detail::uc_flag(detail::view(g), EssentialityTable(g.B())).holds;
}
inline bool is_beta_additive(const GaloisConnection& g) {
  return detail::beta_additive_flag(detail::view(g)).holds;
}

inline PropertyReport classify(const GaloisConnection& g) {
  const detail::PairView p = detail::view(g);
  PropertyReport r = detail::primal_flags(p);
  r.retractable = detail::retractable_flag(p);

  // The dual properties are the primal ones of the dual connection; they are
  // computed both ways and must agree.
  const GaloisConnection d = dual_connection(g);
  const detail::PairView q = detail::view(d);
  r.coessential = detail::essential_flag(q, false);
  r.coretractable = detail::retractable_flag(q);
  r.ucc = detail::uc_flag(q, EssentialityTable(d.B()));
  if (r.coessential != detail::coessential_direct(p) ||
      r.coretractable != detail::coretractable_direct(p) ||
      r.ucc != detail::ucc_direct(p)) {
    throw Error(ErrorKind::kTheoremViolation,
                "dual properties differ between the two computations");
  }
  if (r.essential.holds && !r.cyclically_essential.holds) {
    throw Error(ErrorKind::kTheoremViolation,
                "essential but not cyclically essential");
  }
  return r;
}

// Flags of a pair of tables that need not form a Galois connection, by the
// definitions alone. Only shapes and ranges are validated.
inline PropertyReport classify_unverified(const MonotoneMap& alpha,
                                          const MonotoneMap& beta) {
  if (!alpha.src || !alpha.dst || !beta.src || !beta.dst ||
      !(*alpha.src == *beta.dst) || !(*alpha.dst == *beta.src)) {
    throw Error(ErrorKind::kInvalidArgument,
                "alpha and beta do not run between the same two lattices");
  }
  auto in_range = [](const MonotoneMap& m) {
    if (m.table.size() != m.src->size()) return false;
    return std::all_of(m.table.begin(), m.table.end(),
                       [&](Elem x) { return x < m.dst->size(); });
  };
  if (!in_range(alpha) || !in_range(beta)) {
    throw Error(ErrorKind::kInvalidArgument, "map table has the wrong shape");
  }
  const detail::PairView p{*alpha.src, *alpha.dst, alpha.table, beta.table};
  PropertyReport r = detail::primal_flags(p);
  r.retractable = detail::retractable_by_definition(p);
  r.coessential = detail::coessential_direct(p);
  r.coretractable = detail::coretractable_direct(p);
  r.ucc = detail::ucc_direct(p);
  return r;
}

// Outcome of one clause of a verified statement.
struct ClauseResult {
  bool applied = false;  // side hypotheses held, so the clause was checked
  bool pass = true;
  std::string detail;
};

namespace detail {

struct Hypotheses {
  std::vector<std::string> unmet;
  void require(bool ok, const char* what) {
    if (!ok) unmet.emplace_back(what);
  }
  bool met() const { return unmet.empty(); }
};

}  // namespace detail

struct UdimReport {
  bool hypotheses_met = false;
  std::vector<std::string> unmet;
  DimensionResult udim_a;
  DimensionResult udim_b;
  ClauseResult bound;            // udim(B) <= udim(A)
  ClauseResult essential_equal;  // equality for essential connections
  ClauseResult cyclic_equal;     // equality via cyclic generation + additivity

  bool alarm() const {
    return !bound.pass || !essential_equal.pass || !cyclic_equal.pass;
  }
};

// Uniform dimension under a retractable connection with beta(0) = 0 between
// modular lattices.
inline UdimReport verify_udim_theorem(const GaloisConnection& g) {
  UdimReport r;
  const PropertyReport p = classify(g);
  detail::Hypotheses h;
  h.require(is_modular(g.A()), "A modular");
  h.require(is_modular(g.B()), "B modular");
  h.require(p.retractable.holds, "retractable");
  h.require(p.beta_bottom.holds, "beta(0) = 0");
  r.unmet = h.unmet;
  r.hypotheses_met = h.met();
  if (!r.hypotheses_met) return r;
  r.udim_a = uniform_dimension(g.A());
  r.udim_b = uniform_dimension(g.B());
  const std::string dims = "udim(A)=" + std::to_string(r.udim_a.value) +
                           " udim(B)=" + std::to_string(r.udim_b.value);
  r.bound = {true, r.udim_b.value <= r.udim_a.value, dims};
  if (p.essential.holds) {
    r.essential_equal = {true, r.udim_a.value == r.udim_b.value, dims};
  }
  if (is_cyclically_generated(g.A()) && p.cyclically_essential.holds &&
      p.beta_additive.holds) {
    r.cyclic_equal = {true, r.udim_a.value == r.udim_b.value, dims};
  }
  return r;
}

enum class CorrespondenceMode {
  kGeneral,  // bounded lattices, unique closures taken literally
  kModular,  // modular lattices: all closed elements correspond
};

inline const char* to_string(CorrespondenceMode m) {
  return m == CorrespondenceMode::kGeneral ? "general" : "modular";
}

struct CorrespondenceResult {
  CorrespondenceMode mode = CorrespondenceMode::kGeneral;
  bool hypotheses_met = false;
  std::vector<std::string> unmet;
  // Closed a whose alpha(a) has a unique closure in B, and closed b whose
  // beta(b) has a unique closure in A.
  ElemSet domain_set;
  ElemSet codomain_set;
  // phi(a) = closure of alpha(a); psi(b) = closure of beta(b).
  std::vector<std::pair<Elem, Elem>> phi;
  std::vector<std::pair<Elem, Elem>> psi;
  bool phi_well_defined = false;
  bool psi_well_defined = false;
  // codomain_set equals {b closed in B : beta(b) closed in A}.
  bool coincidence = false;
  bool mutually_inverse = false;
  // Modular mode: domain/codomain sets are all closed elements.
  bool sets_are_all_closed = false;
  // Checked only when B is UC.
  std::optional<bool> order_preserving;
  bool verified = false;
  std::optional<std::string> failure;
  std::vector<Elem> failure_witness;
};

namespace detail {

inline std::optional<Elem> lookup(const std::vector<std::pair<Elem, Elem>>& m,
                                  Elem x) {
  for (auto [k, v] : m) {
    if (k == x) return v;
  }
  return std::nullopt;
}

inline bool contains(const ElemSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace detail

inline CorrespondenceResult closed_correspondence(const GaloisConnection& g,
                                                  CorrespondenceMode mode) {
  CorrespondenceResult r;
  r.mode = mode;
  const PropertyReport p = classify(g);
  detail::Hypotheses h;
  h.require(p.essential.holds, "essential");
  h.require(p.retractable.holds, "retractable");
  h.require(p.uc.holds, "UC");
  if (mode == CorrespondenceMode::kModular) {
    h.require(is_modular(g.A()), "A modular");
    h.require(is_modular(g.B()), "B modular");
  }
  r.unmet = h.unmet;
  r.hypotheses_met = h.met();
  if (!r.hypotheses_met) return r;

  const Lattice& A = g.A();
  const Lattice& B = g.B();
  const EssentialityTable ta(A), tb(B);
  auto fail = [&](std::string why, std::vector<Elem> w) {
    if (!r.failure) {
      r.failure = std::move(why);
      r.failure_witness = std::move(w);
    }
  };

  for (Elem a : ta.closed_elements()) {
    if (tb.unique_closure(g.alpha(a))) {
      r.domain_set.push_back(a);
      r.phi.emplace_back(a, tb.closures(g.alpha(a)).front());
    }
  }
  ElemSet beta_closed;
  for (Elem b : tb.closed_elements()) {
    if (ta.unique_closure(g.beta(b))) {
      r.codomain_set.push_back(b);
      r.psi.emplace_back(b, ta.closures(g.beta(b)).front());
    }
    if (ta.closed(g.beta(b))) beta_closed.push_back(b);
  }

  r.phi_well_defined = std::all_of(r.phi.begin(), r.phi.end(), [&](auto kv) {
    return detail::contains(r.codomain_set, kv.second);
  });
  if (!r.phi_well_defined) fail("phi leaves the codomain set", {});
  r.psi_well_defined = std::all_of(r.psi.begin(), r.psi.end(), [&](auto kv) {
    return detail::contains(r.domain_set, kv.second);
  });
  r.coincidence = r.codomain_set == beta_closed;
  if (r.psi_well_defined != r.coincidence) {
    fail("psi well-definedness does not match the coincidence criterion", {});
  }
  if (r.psi_well_defined) {
    r.mutually_inverse = true;
    for (auto [a, b] : r.phi) {
      auto back = detail::lookup(r.psi, b);
      if (!back || *back != a) {
        r.mutually_inverse = false;
        fail("psi(phi(a)) != a", {a});
      }
    }
    for (auto [b, a] : r.psi) {
      auto fwd = detail::lookup(r.phi, a);
      if (!fwd || *fwd != b) {
        r.mutually_inverse = false;
        fail("phi(psi(b)) != b", {b});
      }
    }
  }

  if (mode == CorrespondenceMode::kModular) {
    r.sets_are_all_closed = r.domain_set == ta.closed_elements() &&
                            r.codomain_set == tb.closed_elements();
    if (!r.sets_are_all_closed) fail("not every closed element corresponds", {});
    if (!r.mutually_inverse) fail("maps are not mutually inverse", {});
    for (auto [b, a] : r.psi) {
      if (a != g.beta(b)) fail("psi(b) differs from beta(b)", {b});
    }
    if (tb.uc()) {
      bool ok = true;
      for (auto [a1, b1] : r.phi) {
        for (auto [a2, b2] : r.phi) {
          if (A.leq(a1, a2) && !B.leq(b1, b2)) ok = false;
        }
      }
      for (auto [b1, a1] : r.psi) {
        for (auto [b2, a2] : r.psi) {
          if (B.leq(b1, b2) && !A.leq(a1, a2)) ok = false;
        }
      }
      r.order_preserving = ok;
      if (!ok) fail("bijection is not order-preserving although B is UC", {});
    }
  }
  r.verified = !r.failure.has_value();
  return r;
}

// Both sides of: "the closed-element bijections are the restrictions of
// alpha and beta" <=> "every closed element of B is Galois".
struct RestrictionEquivalence {
  bool hypotheses_met = false;
  std::vector<std::string> unmet;
  bool restriction_form = false;
  bool closed_are_galois = false;
  bool agree() const { return restriction_form == closed_are_galois; }
};

inline RestrictionEquivalence evaluate_restriction_equivalence(
    const GaloisConnection& g) {
  RestrictionEquivalence e;
  const CorrespondenceResult c =
      closed_correspondence(g, CorrespondenceMode::kModular);
  e.hypotheses_met = c.hypotheses_met;
  e.unmet = c.unmet;
  if (!c.hypotheses_met) return e;
  if (!c.verified) {
    throw Error(ErrorKind::kTheoremViolation,
                "closed correspondence failed: " + c.failure.value_or(""));
  }
  e.restriction_form =
      std::all_of(c.phi.begin(), c.phi.end(),
                  [&](auto kv) { return g.alpha(kv.first) == kv.second; }) &&
      std::all_of(c.psi.begin(), c.psi.end(),
                  [&](auto kv) { return g.beta(kv.first) == kv.second; });
  e.closed_are_galois = std::all_of(
      c.codomain_set.begin(), c.codomain_set.end(),
      [&](Elem b) { return g.alpha_beta(b) == b; });
  return e;
}

inline bool closed_galois_equivalence(const GaloisConnection& g) {
  const RestrictionEquivalence e = evaluate_restriction_equivalence(g);
  if (!e.hypotheses_met) {
    throw Error(ErrorKind::kHypothesisNotMet,
                "needs an essential retractable UC connection between "
                "modular lattices");
  }
  if (!e.agree()) {
    throw Error(ErrorKind::kTheoremViolation,
                "restriction form and Galois-closedness disagree");
  }
  return e.closed_are_galois;
}

struct ExtendingReport {
  bool hypotheses_met = false;
  std::vector<std::string> unmet;
  bool a_extending = false;
  bool b_extending = false;
  ClauseResult to_domain;    // beta additive: B extending => A extending
  ClauseResult to_codomain;  // alpha(1) = 1: A extending => B extending

  bool alarm() const { return !to_domain.pass || !to_codomain.pass; }
};

inline ExtendingReport verify_extending_transfer(const GaloisConnection& g) {
  ExtendingReport r;
  const PropertyReport p = classify(g);
  detail::Hypotheses h;
  h.require(p.essential.holds, "essential");
  h.require(p.retractable.holds, "retractable");
  h.require(p.uc.holds, "UC");
  h.require(is_modular(g.A()), "A modular");
  h.require(is_modular(g.B()), "B modular");
  r.unmet = h.unmet;
  r.hypotheses_met = h.met();
  if (!r.hypotheses_met) return r;
  r.a_extending = is_extending(g.A());
  r.b_extending = is_extending(g.B());
  if (p.beta_additive.holds) {
    r.to_domain = {true, !r.b_extending || r.a_extending,
                   r.b_extending ? "B extending" : "B not extending"};
  }
  if (p.alpha_top.holds) {
    r.to_codomain = {true, !r.a_extending || r.b_extending,
                     r.a_extending ? "A extending" : "A not extending"};
  }
  return r;
}

struct DualCorrespondenceReport {
  bool hypotheses_met = false;
  std::vector<std::string> unmet;
  ElemSet coclosed_a;
  ElemSet coclosed_b;
  // coclosed a in A -> coclosed b in B, and back.
  std::vector<std::pair<Elem, Elem>> forward;
  std::vector<std::pair<Elem, Elem>> backward;
  std::optional<bool> order_preserving;  // checked when A is UCC
  bool verified = false;
  std::optional<std::string> failure;
};

// Bijection between coclosed elements, obtained by running the modular
// closed-element correspondence on the dual connection.
inline DualCorrespondenceReport verify_dual_correspondence(
    const GaloisConnection& g) {
  DualCorrespondenceReport r;
  const PropertyReport p = classify(g);
  detail::Hypotheses h;
  h.require(p.coessential.holds, "coessential");
  h.require(p.coretractable.holds, "coretractable");
  h.require(p.ucc.holds, "UCC");
  h.require(is_modular(g.A()), "A modular");
  h.require(is_modular(g.B()), "B modular");
  h.require(is_amply_supplemented_small_overlap(g.A()), "A amply supplemented");
  r.unmet = h.unmet;
  r.hypotheses_met = h.met();
  if (!r.hypotheses_met) return r;
  const GaloisConnection d = dual_connection(g);
  const CorrespondenceResult c =
      closed_correspondence(d, CorrespondenceMode::kModular);
  if (!c.hypotheses_met) {
    r.failure = "dual connection does not satisfy the primal hypotheses";
    return r;
  }
  // The dual connection runs from dual(B) to dual(A); indices are shared.
  r.coclosed_b = c.domain_set;
  r.coclosed_a = c.codomain_set;
  r.forward = c.psi;
  r.backward = c.phi;
  r.order_preserving = c.order_preserving;
  r.failure = c.failure;
  if (!r.failure) {
    if (r.coclosed_a != DualView(g.A()).coclosed_elements() ||
        r.coclosed_b != DualView(g.B()).coclosed_elements()) {
      r.failure = "coclosed sets differ from the direct computation";
    }
  }
  r.verified = !r.failure.has_value();
  return r;
}

}  // namespace latgal
