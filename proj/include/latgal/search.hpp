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

// Exhaustive enumeration of small bounded lattices and of all adjoint pairs
// between two lattices, and witness search over boolean property queries.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/essentiality.hpp"
#include "latgal/galois.hpp"
#include "latgal/lattice.hpp"

namespace latgal {

inline constexpr std::size_t kMaxEnumerationSize = 8;

namespace detail {

// Calls fn(below) for every naturally labelled poset on m points; below[k]
// is the bitmask of elements strictly below k (all of them < k).
inline void for_each_natural_poset(
    std::size_t m, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> below(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      fn(below);
      return;
    }
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
      bool ideal = true;
      for (std::size_t j = 0; j < k && ideal; ++j) {
        if ((d >> j & 1u) && (below[j] & ~d)) ideal = false;
      }
      if (!ideal) continue;
      below[k] = d;
      rec(k + 1);
    }
  };
  rec(0);
}

inline Lattice relabel_enumerated(const Lattice& l, const CanonicalForm& form,
                                  const std::string& name) {
  const std::size_t n = form.n;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (form.perm[i] == l.bottom()) {
      labels[i] = "0";
    } else if (form.perm[i] == l.top()) {
      labels[i] = "1";
    } else {
      labels[i] = "x" + std::to_string(i);
    }
  }
  return Lattice::from_order(name, std::move(labels), form.matrix);
}

}  // namespace detail

// All bounded lattices with n elements up to isomorphism, in canonical-form
// order. Names are "L<n>_<k>".
inline std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n < 2 || n > kMaxEnumerationSize) {
    throw Error(ErrorKind::kBoundExceeded,
                "lattice enumeration supports 2 <= n <= " +
                    std::to_string(kMaxEnumerationSize));
  }
  const std::size_t m = n - 2;
  std::map<CanonicalForm, Lattice> found;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  detail::for_each_natural_poset(m, [&](const std::vector<std::uint32_t>& below) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      leq[0 * n + i] = 1;
      leq[i * n + (n - 1)] = 1;
      leq[i * n + i] = 1;
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        if (below[k] >> j & 1u) leq[(j + 1) * n + (k + 1)] = 1;
      }
    }
    auto l = Lattice::try_from_order("candidate", labels, std::move(leq));
    if (!l) return;
    CanonicalForm form = canonical_form(*l);
    if (!found.count(form)) found.emplace(form, std::move(*l));
  });
  std::vector<Lattice> out;
  std::size_t k = 0;
  for (const auto& [form, l] : found) {
    out.push_back(detail::relabel_enumerated(
        l, form, "L" + std::to_string(n) + "_" + std::to_string(k++)));
  }
  return out;
}

// All lattices with 2..max_n elements, smallest first.
inline std::vector<LatticePtr> enumerate_lattices_up_to(std::size_t max_n) {
  std::vector<LatticePtr> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (auto& l : enumerate_lattices(n)) out.push_back(share(std::move(l)));
  }
  return out;
}

inline constexpr std::size_t kDefaultConnectionBudget = 5'000'000;

// Calls fn for every adjoint pair (alpha, beta) between a and b. beta is
// built top-down and must preserve meets; alpha(x) is the least y with
// x <= beta(y). Every pair is re-verified by build_connection. Returns the
// number of connections visited; fn may return false to stop early.
inline std::size_t for_each_connection(
    const LatticePtr& a, const LatticePtr& b,
    const std::function<bool(const GaloisConnection&)>& fn,
    std::size_t budget = kDefaultConnectionBudget) {
  const Lattice& A = *a;
  const Lattice& B = *b;
  // Elements of B, largest down-set first: everything above an element is
  // assigned before it.
  std::vector<Elem> order = B.elements();
  std::vector<std::size_t> down(B.size(), 0);
  for (Elem x = 0; x < B.size(); ++x) {
    for (Elem y = 0; y < B.size(); ++y) down[x] += B.leq(y, x);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem x, Elem y) { return down[x] > down[y]; });

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> beta(B.size(), kUnset);
  std::size_t visited = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == order.size()) {
      std::vector<Elem> alpha(A.size());
      for (Elem x = 0; x < A.size(); ++x) {
        Elem m = B.top();
        for (Elem y = 0; y < B.size(); ++y) {
          if (A.leq(x, beta[y])) m = B.meet(m, y);
        }
        alpha[x] = m;
      }
      if (++visited > budget) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "more than " + std::to_string(budget) + " connections");
      }
      GaloisConnection g = build_connection(MonotoneMap{a, b, std::move(alpha)},
                                            MonotoneMap{b, a, beta});
      if (!fn(g)) stop = true;
      return;
    }
    const Elem y = order[i];
    if (y == B.top()) {
      beta[y] = A.top();
      rec(i + 1);
      beta[y] = kUnset;
      return;
    }
    // Forced by meet preservation?
    std::optional<Elem> forced;
    bool consistent = true;
    Elem cap = A.top();
    for (Elem u = 0; u < B.size() && consistent; ++u) {
      if (beta[u] == kUnset) continue;
      if (B.leq(y, u)) cap = A.meet(cap, beta[u]);
      for (Elem v = u + 1; v < B.size(); ++v) {
        if (beta[v] == kUnset || B.meet(u, v) != y) continue;
        const Elem want = A.meet(beta[u], beta[v]);
        if (forced && *forced != want) {
          consistent = false;
          break;
        }
        forced = want;
      }
    }
    if (!consistent) return;
    if (forced) {
      if (!A.leq(*forced, cap)) return;
      beta[y] = *forced;
      rec(i + 1);
      beta[y] = kUnset;
      return;
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (!A.leq(x, cap)) continue;
      beta[y] = x;
      rec(i + 1);
      beta[y] = kUnset;
      if (stop) return;
    }
  };
  rec(0);
  return visited;
}

inline std::vector<GaloisConnection> enumerate_connections(
    const LatticePtr& a, const LatticePtr& b,
    std::size_t budget = kDefaultConnectionBudget) {
  std::vector<GaloisConnection> out;
  for_each_connection(
      a, b,
      [&](const GaloisConnection& g) {
        out.push_back(g);
        return true;
      },
      budget);
  return out;
}

// ---------------------------------------------------------------------------
// Property queries.

enum class QueryTarget { kConnection, kLattice };

inline const char* to_string(QueryTarget t) {
  return t == QueryTarget::kConnection ? "connection" : "lattice";
}

struct QueryNode;
using QueryPtr = std::shared_ptr<const QueryNode>;

struct QueryNode {
  enum class Op { kAtom, kNot, kAnd, kOr, kConst };
  Op op = Op::kAtom;
  // kAtom: scope is "" (the target itself), "A" or "B".
  std::string scope;
  std::string name;
  bool value = false;  // kConst
  QueryPtr lhs, rhs;
};

struct PropertyQuery {
  QueryPtr root;
  QueryTarget target = QueryTarget::kConnection;
};

inline const std::vector<std::string>& connection_flag_names() {
  static const std::vector<std::string> names = {
      "essential",     "cyclically_essential", "retractable", "uc",
      "coessential",   "coretractable",        "ucc",         "beta_additive",
      "alpha_top",     "beta_bottom"};
  return names;
}

inline const std::vector<std::string>& lattice_predicate_names() {
  static const std::vector<std::string> names = {
      "modular", "distributive", "uc",     "uniform",       "extending",
      "cyclically_generated",    "hollow", "ucc",           "lifting"};
  return names;
}

namespace detail {

inline bool contains_name(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  QueryPtr parse() {
    QueryPtr q = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError,
                "query:1:" + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    const bool word = std::isalpha(static_cast<unsigned char>(tok[0]));
    if (word && pos_ + tok.size() < text_.size()) {
      const char next = text_[pos_ + tok.size()];
      if (std::isalnum(static_cast<unsigned char>(next)) || next == '_' || next == '.') {
        return false;
      }
    }
    pos_ += tok.size();
    return true;
  }

  static QueryPtr make(QueryNode::Op op, QueryPtr l, QueryPtr r = nullptr) {
    auto n = std::make_shared<QueryNode>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  QueryPtr parse_or() {
    QueryPtr l = parse_and();
    while (eat("|") || eat("\xE2\x88\xA8") || eat("or")) {
      l = make(QueryNode::Op::kOr, l, parse_and());
    }
    return l;
  }

  QueryPtr parse_and() {
    QueryPtr l = parse_unary();
    while (eat("&") || eat("\xE2\x88\xA7") || eat("and")) {
      l = make(QueryNode::Op::kAnd, l, parse_unary());
    }
    return l;
  }

  QueryPtr parse_unary() {
    if (eat("!") || eat("\xC2\xAC") || eat("not")) {
      return make(QueryNode::Op::kNot, parse_unary());
    }
    if (eat("(")) {
      QueryPtr q = parse_or();
      if (!eat(")")) fail("expected ')'");
      return q;
    }
    return parse_atom();
  }

  QueryPtr parse_atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '.')) {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word.empty()) {
      pos_ = start;
      fail("expected a property name");
    }
    auto n = std::make_shared<QueryNode>();
    if (word == "true" || word == "false") {
      n->op = QueryNode::Op::kConst;
      n->value = word == "true";
      return n;
    }
    n->op = QueryNode::Op::kAtom;
    if (word.size() > 2 && (word[0] == 'A' || word[0] == 'B') && word[1] == '.') {
      n->scope = word.substr(0, 1);
      word = word.substr(2);
    }
    const bool lattice_pred = contains_name(lattice_predicate_names(), word);
    const bool conn_flag = contains_name(connection_flag_names(), word);
    if (n->scope.empty() ? !(lattice_pred || conn_flag) : !lattice_pred) {
      pos_ = start;
      fail("unknown property '" + word + "'");
    }
    n->name = word;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void collect_atoms(const QueryPtr& q, std::vector<const QueryNode*>& out) {
  if (!q) return;
  if (q->op == QueryNode::Op::kAtom) out.push_back(q.get());
  collect_atoms(q->lhs, out);
  collect_atoms(q->rhs, out);
}

}  // namespace detail

// Grammar: or := and ('|' and)*; and := unary ('&' unary)*;
// unary := '!' unary | '(' or ')' | atom. The words and/or/not and the
// symbols ∧ ∨ ¬ are accepted too. Atoms are connection flags or lattice
// predicates, optionally prefixed with "A." or "B.".
//
// Without an explicit target, a query is a lattice query when every
// unprefixed atom is a lattice-only predicate; "uc" and "ucc" name both a
// lattice and a connection property and default to the connection.
inline PropertyQuery parse_query(std::string_view text,
                                 std::optional<QueryTarget> target = std::nullopt) {
  PropertyQuery q;
  q.root = detail::QueryParser(text).parse();
  std::vector<const QueryNode*> atoms;
  detail::collect_atoms(q.root, atoms);
  bool has_scoped = false, needs_connection = false, lattice_only = true;
  for (const QueryNode* a : atoms) {
    if (!a->scope.empty()) {
      has_scoped = true;
      continue;
    }
    const bool conn = detail::contains_name(connection_flag_names(), a->name);
    if (conn) lattice_only = false;
    if (conn && !detail::contains_name(lattice_predicate_names(), a->name)) {
      needs_connection = true;
    }
  }
  if (target) {
    q.target = *target;
  } else {
    q.target = (!has_scoped && lattice_only && !atoms.empty())
                   ? QueryTarget::kLattice
                   : QueryTarget::kConnection;
  }
  if (q.target == QueryTarget::kLattice) {
    if (has_scoped || needs_connection) {
      throw Error(ErrorKind::kParseError,
                  "query uses connection properties but targets a lattice");
    }
  }
  return q;
}

namespace detail {

inline int precedence(QueryNode::Op op) {
  switch (op) {
    case QueryNode::Op::kOr: return 1;
    case QueryNode::Op::kAnd: return 2;
    case QueryNode::Op::kNot: return 3;
    default: return 4;
  }
}

inline std::string print_node(const QueryPtr& q, int parent) {
  std::string s;
  switch (q->op) {
    case QueryNode::Op::kConst:
      return q->value ? "true" : "false";
    case QueryNode::Op::kAtom:
      return q->scope.empty() ? q->name : q->scope + "." + q->name;
    case QueryNode::Op::kNot:
      s = "!" + print_node(q->lhs, precedence(q->op));
      break;
    case QueryNode::Op::kAnd:
      s = print_node(q->lhs, precedence(q->op)) + " & " +
          print_node(q->rhs, precedence(q->op) + 1);
      break;
    case QueryNode::Op::kOr:
      s = print_node(q->lhs, precedence(q->op)) + " | " +
          print_node(q->rhs, precedence(q->op) + 1);
      break;
  }
  return precedence(q->op) < parent ? "(" + s + ")" : s;
}

inline bool same_tree(const QueryPtr& a, const QueryPtr& b) {
  if (!a || !b) return !a && !b;
  return a->op == b->op && a->scope == b->scope && a->name == b->name &&
         a->value == b->value && same_tree(a->lhs, b->lhs) &&
         same_tree(a->rhs, b->rhs);
}

}  // namespace detail

inline std::string print_query(const PropertyQuery& q) {
  return detail::print_node(q.root, 0);
}

inline bool operator==(const PropertyQuery& a, const PropertyQuery& b) {
  return a.target == b.target && detail::same_tree(a.root, b.root);
}

// Lattice predicates by name. "extending" and "lifting" are false on
// non-modular lattices, where they are not defined.
inline bool lattice_predicate(const Lattice& l, const std::string& name) {
  if (name == "modular") return is_modular(l);
  if (name == "distributive") return is_distributive(l);
  if (name == "uc") return is_UC(l);
  if (name == "uniform") return is_uniform(l);
  if (name == "extending") return is_modular(l) && is_extending(l);
  if (name == "cyclically_generated") return is_cyclically_generated(l);
  if (name == "hollow") return DualView(l).is_hollow();
  if (name == "ucc") return DualView(l).is_UCC();
  if (name == "lifting") return is_modular(l) && DualView(l).is_lifting();
  throw Error(ErrorKind::kInvalidArgument, "unknown lattice predicate " + name);
}

inline const Flag& flag_by_name(const PropertyReport& r, const std::string& name) {
  if (name == "essential") return r.essential;
  if (name == "cyclically_essential") return r.cyclically_essential;
  if (name == "retractable") return r.retractable;
  if (name == "uc") return r.uc;
  if (name == "coessential") return r.coessential;
  if (name == "coretractable") return r.coretractable;
  if (name == "ucc") return r.ucc;
  if (name == "beta_additive") return r.beta_additive;
  if (name == "alpha_top") return r.alpha_top;
  if (name == "beta_bottom") return r.beta_bottom;
  throw Error(ErrorKind::kInvalidArgument, "unknown connection flag " + name);
}

namespace detail {

template <typename AtomFn>
bool eval_node(const QueryPtr& q, const AtomFn& atom) {
  switch (q->op) {
    case QueryNode::Op::kConst: return q->value;
    case QueryNode::Op::kAtom: return atom(*q);
    case QueryNode::Op::kNot: return !eval_node(q->lhs, atom);
    case QueryNode::Op::kAnd: return eval_node(q->lhs, atom) && eval_node(q->rhs, atom);
    case QueryNode::Op::kOr: return eval_node(q->lhs, atom) || eval_node(q->rhs, atom);
  }
  return false;
}

}  // namespace detail

inline bool evaluate(const PropertyQuery& q, const Lattice& l) {
  return detail::eval_node(q.root, [&](const QueryNode& a) {
    return lattice_predicate(l, a.name);
  });
}

inline bool evaluate(const PropertyQuery& q, const GaloisConnection& g,
                     const PropertyReport& report) {
  return detail::eval_node(q.root, [&](const QueryNode& a) {
    if (a.scope == "A") return lattice_predicate(g.A(), a.name);
    if (a.scope == "B") return lattice_predicate(g.B(), a.name);
    return flag_by_name(report, a.name).holds;
  });
}

inline bool evaluate(const PropertyQuery& q, const GaloisConnection& g) {
  return evaluate(q, g, classify(g));
}

struct WitnessResult {
  LatticePtr lattice;                        // lattice queries
  std::optional<GaloisConnection> connection;  // connection queries
  std::optional<PropertyReport> report;
  std::size_t instances_checked = 0;
};

inline constexpr std::size_t kMaxConnectionQuerySize = 7;

// Smallest instance satisfying q: lattices by size then canonical order;
// connections by |A| + |B|, then |A|, then canonical order of A and B, then
// enumeration order. Returns nullopt when the bound is exhausted.
inline std::optional<WitnessResult> find_witness(const PropertyQuery& q,
                                                 std::size_t max_n) {
  WitnessResult r;
  if (q.target == QueryTarget::kLattice) {
    for (std::size_t n = 2; n <= max_n; ++n) {
      for (auto& l : enumerate_lattices(n)) {
        ++r.instances_checked;
        if (evaluate(q, l)) {
          r.lattice = share(std::move(l));
          return r;
        }
      }
    }
    return std::nullopt;
  }
  if (max_n > kMaxConnectionQuerySize) {
    throw Error(ErrorKind::kBoundExceeded,
                "connection queries support max size <= " +
                    std::to_string(kMaxConnectionQuerySize));
  }
  std::vector<std::vector<LatticePtr>> by_size(max_n + 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (auto& l : enumerate_lattices(n)) by_size[n].push_back(share(std::move(l)));
  }
  for (std::size_t total = 4; total <= 2 * max_n; ++total) {
    for (std::size_t na = 2; na <= max_n; ++na) {
      if (total < na + 2 || total - na > max_n) continue;
      const std::size_t nb = total - na;
      for (const auto& a : by_size[na]) {
        for (const auto& b : by_size[nb]) {
          for_each_connection(a, b, [&](const GaloisConnection& g) {
            ++r.instances_checked;
            PropertyReport rep = classify(g);
            if (evaluate(q, g, rep)) {
              r.connection = g;
              r.report = rep;
              return false;
            }
            return true;
          });
          if (r.connection) return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace latgal
