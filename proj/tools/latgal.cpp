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

// Command-line front end.
//
// Exit codes: 0 success or PASS, 1 property false or witness found, 2 input
// error, 3 a proved statement failed (internal alarm).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgal/abelian.hpp"
#include "latgal/error.hpp"
#include "latgal/io.hpp"
#include "latgal/report.hpp"
#include "latgal/search.hpp"
#include "latgal/theorems.hpp"

namespace fs = std::filesystem;
using namespace latgal;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kAlarm = 3;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kNotAdjoint:
    case ErrorKind::kNotMonotone:
      return kFalse;
    case ErrorKind::kTheoremViolation:
      return kAlarm;
    default:
      return kInputError;
  }
}

const char* mark(bool b) { return b ? "✓" : "✗"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ConnectionArgs {
  std::string a, b, alpha, beta;

  void add_to(CLI::App* cmd) {
    cmd->add_option("A", a, "domain lattice file")->required()->check(CLI::ExistingFile);
    cmd->add_option("B", b, "codomain lattice file")->required()->check(CLI::ExistingFile);
    cmd->add_option("alpha", alpha, "map file A -> B")->required()->check(CLI::ExistingFile);
    cmd->add_option("beta", beta, "map file B -> A")->required()->check(CLI::ExistingFile);
  }

  std::pair<MonotoneMap, MonotoneMap> load_maps() const {
    const LatticePtr la = share(read_lattice_file(a));
    const LatticePtr lb = share(read_lattice_file(b));
    return {resolve_map(read_map_file(alpha), la, lb),
            resolve_map(read_map_file(beta), lb, la)};
  }

  GaloisConnection load() const {
    auto [al, be] = load_maps();
    return build_connection(std::move(al), std::move(be));
  }
};

void print_flags(const PropertyReport& r, const Lattice& A, const Lattice& B) {
  const Json f = flags_json(r, A, B);
  const Json& w = f["witnesses"];
  for (const auto& [k, v] : f.items()) {
    if (k == "witnesses") continue;
    std::cout << k << ' ' << mark(v.get<bool>());
    if (w.contains(k)) {
      std::cout << "  at";
      for (const auto& s : w[k]) std::cout << ' ' << s.get<std::string>();
    }
    std::cout << "\n";
  }
}

std::string join_labels(const Lattice& l, const ElemSet& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += l.label(xs[i]);
  }
  return out + "}";
}

int cmd_check_lattice(const std::string& file, bool dot, const std::string& highlight) {
  const Lattice l = read_lattice_file(file);
  if (!dot) {
    std::cout << print_lattice(l);
    return kOk;
  }
  ElemSet marked;
  if (highlight == "closed") {
    marked = closed_elements(l);
  } else if (highlight == "cyclic") {
    marked = cyclic_elements(l);
  } else if (highlight == "coclosed") {
    marked = DualView(l).coclosed_elements();
  } else if (!highlight.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown highlight '" + highlight + "'");
  }
  std::cout << emit_dot(l, marked);
  return kOk;
}

int cmd_props(const std::string& file, bool json, const std::vector<std::string>& require) {
  const Lattice l = read_lattice_file(file);
  const Json r = lattice_report(l);
  if (json) {
    print_json(r);
  } else {
    for (const auto& [k, v] : r.items()) {
      if (k == "schema") continue;
      std::cout << k << ": " << v.dump() << "\n";
    }
  }
  int rc = kOk;
  for (const auto& name : require) {
    if (!r.contains(name) || !r[name].is_boolean()) {
      throw Error(ErrorKind::kInvalidArgument, "'" + name + "' is not a lattice predicate");
    }
    if (!r[name].get<bool>()) rc = kFalse;
  }
  return rc;
}

int cmd_check_conn(const ConnectionArgs& args) {
  auto [al, be] = args.load_maps();
  try {
    const GaloisConnection g = build_connection(std::move(al), std::move(be));
    std::cout << "adjoint: " << g.A().name() << " -> " << g.B().name() << "\n";
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotAdjoint && e.kind() != ErrorKind::kNotMonotone) throw;
    std::cout << "not adjoint: " << e.what() << "\n";
    return kFalse;
  }
}

int cmd_classify(const ConnectionArgs& args, bool json, bool unverified) {
  auto [al, be] = args.load_maps();
  PropertyReport p;
  Json j;
  try {
    const GaloisConnection g = build_connection(al, be);
    p = classify(g);
    j = connection_report(g);
  } catch (const Error& e) {
    if (!unverified || exit_code_for(e.kind()) != kFalse) throw;
    p = classify_unverified(al, be);
    j = unverified_report(al, be, e.what());
  }
  if (json) {
    print_json(j);
  } else {
    if (!j["adjunction"].get<bool>()) {
      std::cout << "not adjoint; definitional flags only\n";
    }
    print_flags(p, *al.src, *al.dst);
    if (j.contains("galois_elements")) {
      const auto& ge = j["galois_elements"];
      std::cout << "galois A " << ge["A"].dump() << "\n";
      std::cout << "galois B " << ge["B"].dump() << "\n";
    }
  }
  return p.essential.holds && p.retractable.holds && p.uc.holds ? kOk : kFalse;
}

int cmd_bijection(const ConnectionArgs& args, const std::string& mode, bool json) {
  const GaloisConnection g = args.load();
  CorrespondenceMode m;
  if (mode == "general") {
    m = CorrespondenceMode::kGeneral;
  } else if (mode == "modular") {
    m = CorrespondenceMode::kModular;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "mode must be general or modular");
  }
  const CorrespondenceResult c = closed_correspondence(g, m);
  Json j = {{"schema", kJsonSchema}, {"A", g.A().name()}, {"B", g.B().name()}};
  j["correspondence"] = correspondence_json(g, c);
  if (json) {
    print_json(j);
  } else if (!c.hypotheses_met) {
    std::cout << "hypotheses not met:";
    for (const auto& u : c.unmet) std::cout << ' ' << u << ';';
    std::cout << "\n";
  } else {
    std::cout << "closed in A " << join_labels(g.A(), c.domain_set) << "\n";
    std::cout << "closed in B " << join_labels(g.B(), c.codomain_set) << "\n";
    for (auto [a, b] : c.phi) std::cout << g.A().label(a) << " <-> " << g.B().label(b) << "\n";
    std::cout << (c.verified ? "PASS" : "FAIL: " + c.failure.value_or("")) << "\n";
  }
  if (!c.hypotheses_met) return kFalse;
  return c.verified ? kOk : kAlarm;
}

int report_verdict(bool hypotheses_met, bool alarm) {
  if (!hypotheses_met) return kFalse;
  return alarm ? kAlarm : kOk;
}

void print_plain(const Json& j) {
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
}

int cmd_udim(const ConnectionArgs& args, bool json) {
  const GaloisConnection g = args.load();
  const UdimReport u = verify_udim_theorem(g);
  Json j = {{"schema", kJsonSchema}, {"A", g.A().name()}, {"B", g.B().name()}};
  j["udim"] = udim_json(g, u);
  json ? print_json(j) : print_plain(j["udim"]);
  return report_verdict(u.hypotheses_met, u.alarm());
}

int cmd_extending(const ConnectionArgs& args, bool json) {
  const GaloisConnection g = args.load();
  const ExtendingReport x = verify_extending_transfer(g);
  Json j = {{"schema", kJsonSchema}, {"A", g.A().name()}, {"B", g.B().name()}};
  j["extending"] = extending_json(x);
  json ? print_json(j) : print_plain(j["extending"]);
  return report_verdict(x.hypotheses_met, x.alarm());
}

int cmd_dual(const ConnectionArgs& args, bool json) {
  const GaloisConnection g = args.load();
  const DualCorrespondenceReport d = verify_dual_correspondence(g);
  Json j = {{"schema", kJsonSchema}, {"A", g.A().name()}, {"B", g.B().name()}};
  j["dual_correspondence"] = dual_json(g, d);
  json ? print_json(j) : print_plain(j["dual_correspondence"]);
  return report_verdict(d.hypotheses_met, d.hypotheses_met && !d.verified);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + p.string());
  out << text;
}

int cmd_search(std::size_t max_size, const std::string& query, const std::string& target,
               const std::string& out_dir) {
  std::optional<QueryTarget> t;
  if (target == "lattice") {
    t = QueryTarget::kLattice;
  } else if (target == "connection") {
    t = QueryTarget::kConnection;
  } else if (!target.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "target must be lattice or connection");
  }
  if (max_size < 2 || max_size > kMaxEnumerationSize) {
    throw Error(ErrorKind::kBoundExceeded,
                "max size must be in [2, " + std::to_string(kMaxEnumerationSize) + "]");
  }
  const PropertyQuery q = parse_query(query, t);
  const auto w = find_witness(q, max_size);
  if (!w) {
    std::cout << "none\n";
    return kOk;
  }
  Json j = {{"schema", kJsonSchema}, {"query", print_query(q)},
            {"target", to_string(q.target)}, {"instances_checked", w->instances_checked}};
  if (w->lattice) {
    j["lattice"] = print_lattice(*w->lattice);
    j["report"] = lattice_report(*w->lattice);
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / "L.lat", print_lattice(*w->lattice));
    }
  } else {
    const GaloisConnection& g = *w->connection;
    j["A"] = print_lattice(g.A());
    j["B"] = print_lattice(g.B());
    j["alpha"] = print_map(g.alpha_map(), "alpha", "A.lat", "B.lat");
    j["beta"] = print_map(g.beta_map(), "beta", "B.lat", "A.lat");
    j["properties"] = flags_json(*w->report, g.A(), g.B());
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      const fs::path d(out_dir);
      write_file(d / "A.lat", print_lattice(g.A()));
      write_file(d / "B.lat", print_lattice(g.B()));
      write_file(d / "alpha.map", print_map(g.alpha_map(), "alpha", "A.lat", "B.lat"));
      write_file(d / "beta.map", print_map(g.beta_map(), "beta", "B.lat", "A.lat"));
    }
  }
  print_json(j);
  return kFalse;
}

int cmd_theorem_suite(std::size_t max_size, const std::string& out_dir, bool json) {
  SuiteOptions opt;
  opt.max_n = max_size;
  if (!out_dir.empty()) opt.reproducer_dir = out_dir;
  const SuiteReport r = run_theorem_suite(opt);
  if (json) {
    print_json(suite_json(r));
  } else {
    std::cout << "lattices " << r.lattices << ", pairs " << r.lattice_pairs
              << ", connections " << r.connections << "\n";
    for (const auto& c : r.clauses) {
      std::cout << (c.failed ? "FAIL " : "PASS ") << c.name << "  tested " << c.tested;
      if (c.failed) std::cout << " failed " << c.failed;
      std::cout << "\n";
    }
    for (const auto& c : r.observations) {
      std::cout << "seen " << c.name << "  " << c.failed << " of " << c.tested << "\n";
    }
  }
  return r.ok() ? kOk : kAlarm;
}

int cmd_abelian(const std::string& group, bool dot, const std::string& m,
                const std::string& n, bool json) {
  if (!group.empty()) {
    if (!m.empty() || !n.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "--group excludes --m and --n");
    }
    const Lattice l = subgroup_lattice(FinAbGroup::parse(group));
    std::cout << (dot ? emit_dot(l) : print_lattice(l));
    return kOk;
  }
  if (m.empty() || n.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give --group, or both --m and --n");
  }
  const ModulePair p(FinAbGroup::parse(m), FinAbGroup::parse(n));
  const ModuleReport r = module_report(p);
  if (json) {
    print_json(r.json);
  } else {
    std::cout << "M = " << p.M().name() << ", N = " << p.N().name()
              << ", |Hom(M,N)| = " << p.U().size() << "\n";
    for (const auto& [k, v] : r.json["module"].items()) {
      std::cout << k << ' ' << mark(v.get<bool>()) << "\n";
    }
    for (const auto& c : r.checks) {
      std::cout << (!c.applied ? "skip " : c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.applied && !c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
  }
  return r.alarm() ? kAlarm : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, Galois connections and submodule lattices."};
  app.require_subcommand(1);
  int rc = kOk;

  std::string file, highlight, mode = "modular", query, target, out_dir, group, gm, gn;
  bool dot = false, json = false, unverified = false, suite = false;
  std::vector<std::string> require;
  std::size_t max_size = 5;
  ConnectionArgs conn;

  auto* check = app.add_subcommand("check-lattice", "validate a lattice file and print it");
  check->add_option("file", file)->required()->check(CLI::ExistingFile);
  check->add_flag("--dot", dot, "emit a DOT Hasse diagram");
  check->add_option("--highlight", highlight, "closed, cyclic or coclosed (with --dot)");

  auto* props = app.add_subcommand("props", "lattice predicates, dimensions and closed sets");
  props->add_option("file", file)->required()->check(CLI::ExistingFile);
  props->add_flag("--json", json);
  props->add_option("--require", require, "exit 1 unless these predicates hold");

  auto* cc = app.add_subcommand("check-conn", "check that two maps are adjoint");
  conn.add_to(cc);

  auto* cl = app.add_subcommand("classify", "classify a Galois connection");
  conn.add_to(cl);
  cl->add_flag("--json", json);
  cl->add_flag("--unverified", unverified, "report definitional flags for non-adjoint tables");

  auto* bij = app.add_subcommand("bijection", "closed-element correspondence");
  conn.add_to(bij);
  bij->add_option("--mode", mode, "general or modular")
      ->check(CLI::IsMember({"general", "modular"}));
  bij->add_flag("--json", json);

  auto* ud = app.add_subcommand("udim", "uniform dimension under a retractable connection");
  conn.add_to(ud);
  ud->add_flag("--json", json);

  auto* ex = app.add_subcommand("extending", "transfer of the extending property");
  conn.add_to(ex);
  ex->add_flag("--json", json);

  auto* du = app.add_subcommand("dual", "coclosed-element correspondence");
  conn.add_to(du);
  du->add_flag("--json", json);

  auto* se = app.add_subcommand("search", "smallest instance satisfying a query");
  se->add_option("--max-size", max_size, "largest lattice size");
  se->add_option("--query", query, "boolean expression over property names");
  se->add_option("--target", target, "lattice or connection")
      ->check(CLI::IsMember({"lattice", "connection"}));
  se->add_option("--out", out_dir, "directory for reproducer files");
  se->add_flag("--theorem-suite", suite, "run every verified statement over all instances");
  se->add_flag("--json", json, "JSON suite report");

  auto* ab = app.add_subcommand("abelian", "subgroup lattices and module connections");
  ab->add_option("--group", group, "cyclic orders, e.g. 2,4");
  ab->add_flag("--dot", dot);
  ab->add_option("--m", gm, "M as cyclic orders");
  ab->add_option("--n", gn, "N as cyclic orders");
  ab->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) rc = cmd_check_lattice(file, dot, highlight);
    if (*props) rc = cmd_props(file, json, require);
    if (*cc) rc = cmd_check_conn(conn);
    if (*cl) rc = cmd_classify(conn, json, unverified);
    if (*bij) rc = cmd_bijection(conn, mode, json);
    if (*ud) rc = cmd_udim(conn, json);
    if (*ex) rc = cmd_extending(conn, json);
    if (*du) rc = cmd_dual(conn, json);
    if (*se) {
      if (suite) {
        rc = cmd_theorem_suite(max_size, out_dir, json);
      } else {
        if (query.empty()) throw Error(ErrorKind::kInvalidArgument, "--query is required");
        rc = cmd_search(max_size, query, target, out_dir);
      }
    }
    if (*ab) rc = cmd_abelian(group, dot, gm, gn, json);
  } catch (const Error& e) {
    std::cerr << "latgal: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "latgal: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
