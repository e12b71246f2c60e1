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

// JSON renderings. Every top-level document carries "schema": 1. Elements
// are written by label.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latgal/abelian.hpp"
#include "latgal/essentiality.hpp"
#include "latgal/galois.hpp"
#include "latgal/lattice.hpp"
#include "latgal/search.hpp"
#include "latgal/theorems.hpp"

namespace latgal {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

inline Json labels_json(const Lattice& l, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(l.label(x));
  return out;
}

inline Json pairs_json(const Lattice& from, const Lattice& to,
                       const std::vector<std::pair<Elem, Elem>>& m) {
  Json out = Json::object();
  for (auto [k, v] : m) out[from.label(k)] = to.label(v);
  return out;
}

inline Json flags_json(const PropertyReport& r, const Lattice& A, const Lattice& B) {
  struct Row {
    const char* name;
    const Flag& flag;
    const Lattice& where;
  };
  const Row rows[] = {
      {"essential", r.essential, A},
      {"cyclically_essential", r.cyclically_essential, A},
      {"retractable", r.retractable, B},
      {"uc", r.uc, B},
      {"coessential", r.coessential, B},
      {"coretractable", r.coretractable, A},
      {"ucc", r.ucc, A},
      {"beta_additive", r.beta_additive, B},
      {"alpha_top", r.alpha_top, A},
      {"beta_bottom", r.beta_bottom, B},
  };
  Json out = Json::object();
  Json witnesses = Json::object();
  for (const auto& row : rows) {
    out[row.name] = row.flag.holds;
    if (!row.flag.holds && !row.flag.witness.empty()) {
      witnesses[row.name] = labels_json(row.where, row.flag.witness);
    }
  }
  out["witnesses"] = witnesses;
  return out;
}

inline Json clause_json(const ClauseResult& c) {
  Json out = {{"applied", c.applied}};
  if (c.applied) {
    out["pass"] = c.pass;
    out["detail"] = c.detail;
  }
  return out;
}

inline Json udim_json(const GaloisConnection& g, const UdimReport& u) {
  Json out = {{"hypotheses_met", u.hypotheses_met}, {"unmet", u.unmet}};
  if (!u.hypotheses_met) return out;
  out["udim_A"] = {{"value", u.udim_a.value}, {"witness", labels_json(g.A(), u.udim_a.witness)}};
  out["udim_B"] = {{"value", u.udim_b.value}, {"witness", labels_json(g.B(), u.udim_b.witness)}};
  out["bound"] = clause_json(u.bound);
  out["essential_equal"] = clause_json(u.essential_equal);
  out["cyclic_equal"] = clause_json(u.cyclic_equal);
  out["alarm"] = u.alarm();
  return out;
}

inline Json correspondence_json(const GaloisConnection& g, const CorrespondenceResult& c) {
  Json out = {{"mode", to_string(c.mode)},
              {"hypotheses_met", c.hypotheses_met},
              {"unmet", c.unmet}};
  if (!c.hypotheses_met) return out;
  out["domain_set"] = labels_json(g.A(), c.domain_set);
  out["codomain_set"] = labels_json(g.B(), c.codomain_set);
  out["phi"] = pairs_json(g.A(), g.B(), c.phi);
  out["psi"] = pairs_json(g.B(), g.A(), c.psi);
  out["phi_well_defined"] = c.phi_well_defined;
  out["psi_well_defined"] = c.psi_well_defined;
  out["coincidence"] = c.coincidence;
  out["mutually_inverse"] = c.mutually_inverse;
  if (c.mode == CorrespondenceMode::kModular) {
    out["sets_are_all_closed"] = c.sets_are_all_closed;
    out["order_preserving"] = c.order_preserving ? Json(*c.order_preserving) : Json(nullptr);
  }
  out["verified"] = c.verified;
  out["failure"] = c.failure ? Json(*c.failure) : Json(nullptr);
  return out;
}

inline Json extending_json(const ExtendingReport& x) {
  Json out = {{"hypotheses_met", x.hypotheses_met}, {"unmet", x.unmet}};
  if (!x.hypotheses_met) return out;
  out["A_extending"] = x.a_extending;
  out["B_extending"] = x.b_extending;
  out["to_domain"] = clause_json(x.to_domain);
  out["to_codomain"] = clause_json(x.to_codomain);
  out["alarm"] = x.alarm();
  return out;
}

inline Json dual_json(const GaloisConnection& g, const DualCorrespondenceReport& d) {
  Json out = {{"hypotheses_met", d.hypotheses_met}, {"unmet", d.unmet}};
  if (!d.hypotheses_met) return out;
  out["coclosed_A"] = labels_json(g.A(), d.coclosed_a);
  out["coclosed_B"] = labels_json(g.B(), d.coclosed_b);
  out["forward"] = pairs_json(g.A(), g.B(), d.forward);
  out["backward"] = pairs_json(g.B(), g.A(), d.backward);
  out["order_preserving"] = d.order_preserving ? Json(*d.order_preserving) : Json(nullptr);
  out["verified"] = d.verified;
  out["failure"] = d.failure ? Json(*d.failure) : Json(nullptr);
  return out;
}

// Correspondence in the strongest mode whose lattice hypotheses hold.
inline CorrespondenceResult best_correspondence(const GaloisConnection& g) {
  const bool modular = is_modular(g.A()) && is_modular(g.B());
  return closed_correspondence(
      g, modular ? CorrespondenceMode::kModular : CorrespondenceMode::kGeneral);
}

inline Json connection_report(const GaloisConnection& g) {
  const PropertyReport p = classify(g);
  const auto [ga, gb] = galois_elements(g);
  Json out = {{"schema", kJsonSchema}, {"A", g.A().name()}, {"B", g.B().name()},
              {"adjunction", true}};
  out["properties"] = flags_json(p, g.A(), g.B());
  out["galois_elements"] = {{"A", labels_json(g.A(), ga)}, {"B", labels_json(g.B(), gb)}};
  out["closed_elements"] = {{"A", labels_json(g.A(), closed_elements(g.A()))},
                            {"B", labels_json(g.B(), closed_elements(g.B()))}};
  out["theorems"] = {
      {"udim", udim_json(g, verify_udim_theorem(g))},
      {"correspondence", correspondence_json(g, best_correspondence(g))},
      {"extending", extending_json(verify_extending_transfer(g))},
      {"dual_correspondence", dual_json(g, verify_dual_correspondence(g))},
  };
  return out;
}

// For tables that are not adjoint: the definitional flags only.
inline Json unverified_report(const MonotoneMap& alpha, const MonotoneMap& beta,
                              const std::string& why) {
  const PropertyReport p = classify_unverified(alpha, beta);
  Json out = {{"schema", kJsonSchema}, {"A", alpha.src->name()}, {"B", alpha.dst->name()},
              {"adjunction", false}, {"adjunction_failure", why}};
  out["properties"] = flags_json(p, *alpha.src, *alpha.dst);
  out["theorems"] = nullptr;
  return out;
}

inline Json lattice_report(const Lattice& l) {
  const DualView d(l);
  const bool modular = is_modular(l);
  const DimensionResult u = uniform_dimension(l);
  const DimensionResult h = hollow_dimension(l);
  Json out = {{"schema", kJsonSchema}, {"lattice", l.name()}, {"size", l.size()}};
  out["modular"] = modular;
  out["distributive"] = is_distributive(l);
  out["uc"] = is_UC(l);
  out["uniform"] = is_uniform(l);
  out["extending"] = modular ? Json(is_extending(l)) : Json(nullptr);
  out["cyclically_generated"] = is_cyclically_generated(l);
  out["hollow"] = d.is_hollow();
  out["ucc"] = d.is_UCC();
  out["lifting"] = modular ? Json(d.is_lifting()) : Json(nullptr);
  out["amply_supplemented_small_overlap"] = is_amply_supplemented_small_overlap(l);
  out["amply_supplemented_standard"] = is_amply_supplemented_standard(l);
  out["cyclic_elements"] = labels_json(l, cyclic_elements(l));
  out["closed_elements"] = labels_json(l, closed_elements(l));
  out["coclosed_elements"] = labels_json(l, d.coclosed_elements());
  out["udim"] = {{"value", u.value}, {"witness", labels_json(l, u.witness)}};
  out["hdim"] = {{"value", h.value}, {"witness", labels_json(l, h.witness)}};
  return out;
}

inline Json suite_json(const SuiteReport& r) {
  Json out = {{"schema", kJsonSchema}, {"max_n", r.max_n}, {"lattices", r.lattices},
              {"lattice_pairs", r.lattice_pairs}, {"connections", r.connections},
              {"ok", r.ok()}, {"all_exercised", r.all_exercised()}};
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"statement", c.statement}, {"tested", c.tested},
                       {"failed", c.failed}, {"reproducers", c.reproducers}});
  }
  Json obs = Json::array();
  for (const auto& c : r.observations) {
    obs.push_back({{"name", c.name}, {"statement", c.statement}, {"tested", c.tested},
                   {"seen", c.failed}});
  }
  out["clauses"] = clauses;
  out["observations"] = obs;
  return out;
}

// Module-level checks for a pair (M, N).
struct ModuleCheck {
  std::string name;
  bool applied = true;
  bool pass = true;
  std::string detail;
};

struct ModuleReport {
  Json json;
  std::vector<ModuleCheck> checks;
  bool alarm() const {
    for (const auto& c : checks) {
      if (c.applied && !c.pass) return true;
    }
    return false;
  }
};

inline ModuleReport module_report(const ModulePair& p) {
  ModuleReport r;
  const GaloisConnection rm = p.connection_rm_lu();
  const GaloisConnection rn = p.connection_rn_lu();
  const PropertyReport crm = classify(rm);
  const PropertyReport crn = classify(rn);
  const bool ret = p.is_retractable_module();
  const bool coret = p.is_coretractable_module();
  const bool sp = p.is_semi_projective();
  const bool si = p.is_semi_injective();
  const std::size_t udim_n = uniform_dimension(*p.lattice_N().lattice).value;
  const std::size_t hdim_m = hollow_dimension(*p.lattice_M().lattice).value;
  const std::size_t udim_s = uniform_dimension(*p.S_lattice().lattice).value;
  const std::size_t udim_t = uniform_dimension(*p.T_lattice().lattice).value;

  auto add = [&](std::string name, bool applied, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), applied, !applied || pass, std::move(detail)});
  };
  add("retractable-module-matches-connection", true,
      ret == crn.retractable.holds && ret == p.is_retractable_module_by_images(),
      "N M-retractable = (r'_N, l'_U) retractable");
  add("coretractable-module-matches-connection", true,
      coret == crm.retractable.holds && coret == p.is_coretractable_module_by_kernels(),
      "M N-coretractable = (r_M, l_U) retractable");
  add("semi-projective-cyclically-essential", sp, crn.cyclically_essential.holds,
      "M N-semi-projective => (r'_N, l'_U) cyclically essential");
  add("semi-injective-cyclically-essential", si, crm.cyclically_essential.holds,
      "N M-semi-injective => (r_M, l_U) cyclically essential");
  add("image-annihilator-additive", true, crn.beta_additive.holds, "l'_U additive");
  add("kernel-annihilator-additive", true, crm.beta_additive.holds, "l_U additive");
  add("udim-N-bound", ret, udim_n <= udim_s,
      "udim(N)=" + std::to_string(udim_n) + " udim(U_S)=" + std::to_string(udim_s));
  add("hdim-M-bound", coret, hdim_m <= udim_t,
      "hdim(M)=" + std::to_string(hdim_m) + " udim(_TU)=" + std::to_string(udim_t));
  add("udim-N-equal", ret && sp, udim_n == udim_s,
      "udim(N)=" + std::to_string(udim_n) + " udim(U_S)=" + std::to_string(udim_s));
  add("hdim-M-equal", coret && si, hdim_m == udim_t,
      "hdim(M)=" + std::to_string(hdim_m) + " udim(_TU)=" + std::to_string(udim_t));
  for (const auto* c : {&rm, &rn}) {
    const PropertyReport& cr = c == &rm ? crm : crn;
    const std::string tag = c == &rm ? "r_M,l_U" : "r'_N,l'_U";
    const bool hyp = cr.essential.holds && cr.retractable.holds && cr.uc.holds &&
                     is_modular(c->A()) && is_modular(c->B());
    if (hyp) {
      const CorrespondenceResult m = closed_correspondence(*c, CorrespondenceMode::kModular);
      add("closed-correspondence (" + tag + ")", true, m.verified, m.failure.value_or(""));
      const ExtendingReport x = verify_extending_transfer(*c);
      add("extending-transfer (" + tag + ")", true, !x.alarm(), "");
    } else {
      add("closed-correspondence (" + tag + ")", false, true, "hypotheses not met");
      add("extending-transfer (" + tag + ")", false, true, "hypotheses not met");
    }
  }

  Json j = {{"schema", kJsonSchema}, {"M", p.M().name()}, {"N", p.N().name()},
            {"hom_size", p.U().size()}, {"S_size", p.S().size()}, {"T_size", p.T().size()}};
  j["lattice_sizes"] = {{"L(M)", p.lattice_M().lattice->size()},
                        {"L(N)", p.lattice_N().lattice->size()},
                        {"L_T(U)", p.T_lattice().lattice->size()},
                        {"L_S(U)", p.S_lattice().lattice->size()}};
  j["module"] = {{"retractable", ret}, {"coretractable", coret},
                 {"semi_projective", sp}, {"semi_injective", si}};
  j["dimensions"] = {{"udim_N", udim_n}, {"hdim_M", hdim_m},
                     {"udim_U_S", udim_s}, {"udim_T_U", udim_t}};
  j["connections"] = {{"r_M,l_U", flags_json(crm, rm.A(), rm.B())},
                      {"r'_N,l'_U", flags_json(crn, rn.A(), rn.B())}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"applied", c.applied}, {"pass", c.pass},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["alarm"] = r.alarm();
  r.json = std::move(j);
  return r;
}

}  // namespace latgal
