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

// Finite bounded lattices.
//
// Elements are dense indices 0..n-1; labels are kept only for I/O. The order
// relation and the meet/join tables are materialised at construction, so all
// queries are table lookups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latgal/error.hpp"

namespace latgal {

using Elem = std::size_t;
// Sorted ascending, no duplicates.
using ElemSet = std::vector<Elem>;

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

class Lattice {
 public:
  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Elem> find(std::string_view label) const {
    for (Elem i = 0; i < n_; ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  Elem at(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::kUnknownLabel,
                "no element '" + std::string(label) + "' in " + name_);
  }

  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  // Only intervals [a, a] are degenerate; top-level lattices never are.
  bool degenerate() const noexcept { return n_ == 1; }

  Elem join_all(std::span<const Elem> xs) const {
    Elem r = bottom_;
    for (Elem x : xs) r = join(r, x);
    return r;
  }
  Elem meet_all(std::span<const Elem> xs) const {
    Elem r = top_;
    for (Elem x : xs) r = meet(r, x);
    return r;
  }

  ElemSet elements() const {
    ElemSet all(n_);
    std::iota(all.begin(), all.end(), Elem{0});
    return all;
  }

  // Element-wise identity: same labels, same order, same name.
  friend bool operator==(const Lattice&, const Lattice&) = default;

  // Builds a lattice from an explicit order relation (row-major n*n). The
  // order must be a partial order; meets, joins and bounds are computed and
  // verified. Throws NotALattice / NotBounded.
  static Lattice from_order(std::string name, std::vector<std::string> labels,
                            std::vector<std::uint8_t> leq);

  // Same, but returns nullopt instead of throwing when some pair lacks a
  // meet or join or the poset is unbounded. Used by the enumerator.
  static std::optional<Lattice> try_from_order(
      std::string name, std::vector<std::string> labels,
      std::vector<std::uint8_t> leq);

  // Builds a lattice whose meet and join are known algebraically (subgroup
  // lattices: intersection and sum). Performs O(n^2) consistency checks
  // rather than the O(n^3) glb/lub search.
  static Lattice from_tables(std::string name, std::vector<std::string> labels,
                             std::vector<std::uint8_t> leq,
                             std::vector<std::uint32_t> meet,
                             std::vector<std::uint32_t> join);

  // One-element structure. Only degenerate intervals [a, a] produce it.
  static Lattice point(std::string name, std::string label) {
    Lattice l;
    l.name_ = std::move(name);
    l.labels_ = {std::move(label)};
    l.n_ = 1;
    l.leq_ = {1};
    l.meet_ = {0};
    l.join_ = {0};
    return l;
  }

  Lattice with_name(std::string name) const {
    Lattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  friend Lattice dual(const Lattice& lattice);

  Lattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

namespace detail {

inline std::optional<std::pair<Elem, Elem>> find_bounds(
    std::size_t n, const std::vector<std::uint8_t>& leq) {
  std::optional<Elem> bottom, top;
  for (Elem i = 0; i < n; ++i) {
    bool below_all = true, above_all = true;
    for (Elem j = 0; j < n; ++j) {
      below_all = below_all && leq[i * n + j];
      above_all = above_all && leq[j * n + i];
    }
    if (below_all) bottom = i;
    if (above_all) top = i;
  }
  if (!bottom || !top) return std::nullopt;
  return std::pair{*bottom, *top};
}

// Greatest lower bound by scanning; nullopt when it does not exist. A single
// increasing pass reaches the maximum lower bound if there is one; the second
// pass confirms it dominates every lower bound.
inline std::optional<Elem> glb(std::size_t n,
                               const std::vector<std::uint8_t>& leq, Elem a,
                               Elem b) {
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (leq[c * n + a] && leq[c * n + b] && (!best || leq[*best * n + c])) {
      best = c;
    }
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < n; ++c) {
    if (leq[c * n + a] && leq[c * n + b] && !leq[c * n + *best]) {
      return std::nullopt;
    }
  }
  return best;
}

inline std::optional<Elem> lub(std::size_t n,
                               const std::vector<std::uint8_t>& leq, Elem a,
                               Elem b) {
  std::optional<Elem> best;
  for (Elem c = 0; c < n; ++c) {
    if (leq[a * n + c] && leq[b * n + c] && (!best || leq[c * n + *best])) {
      best = c;
    }
  }
  if (!best) return std::nullopt;
  for (Elem c = 0; c < n; ++c) {
    if (leq[a * n + c] && leq[b * n + c] && !leq[*best * n + c]) {
      return std::nullopt;
    }
  }
  return best;
}

struct OrderCheck {
  bool ok = true;
  ErrorKind kind = ErrorKind::kNotALattice;
  std::string message;
  std::vector<Elem> witness;
};

inline OrderCheck check_partial_order(std::size_t n,
                                      const std::vector<std::uint8_t>& leq) {
  if (leq.size() != n * n) {
    return {false, ErrorKind::kInvalidArgument, "order matrix has wrong size",
            {}};
  }
  for (Elem a = 0; a < n; ++a) {
    if (!leq[a * n + a]) {
      return {false, ErrorKind::kNotALattice, "order is not reflexive", {a}};
    }
    for (Elem b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) {
        return {false, ErrorKind::kCycleInCovers, "order is not antisymmetric",
                {a, b}};
      }
      if (!leq[a * n + b]) continue;
      for (Elem c = 0; c < n; ++c) {
        if (leq[b * n + c] && !leq[a * n + c]) {
          return {false, ErrorKind::kNotALattice, "order is not transitive",
                  {a, b, c}};
        }
      }
    }
  }
  return {};
}

}  // namespace detail

inline std::optional<Lattice> Lattice::try_from_order(
    std::string name, std::vector<std::string> labels,
    std::vector<std::uint8_t> leq) {
  const std::size_t n = labels.size();
  if (n < 2 || leq.size() != n * n) return std::nullopt;
  auto bounds = detail::find_bounds(n, leq);
  if (!bounds) return std::nullopt;
  Lattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = detail::glb(n, leq, a, b);
      auto j = detail::lub(n, leq, a, b);
      if (!m || !j) return std::nullopt;
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(*m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(*j);
    }
  }
  l.name_ = std::move(name);
  l.labels_ = std::move(labels);
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.bottom_ = bounds->first;
  l.top_ = bounds->second;
  return l;
}

inline Lattice Lattice::from_order(std::string name,
                                   std::vector<std::string> labels,
                                   std::vector<std::uint8_t> leq) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw Error(ErrorKind::kNotBounded,
                name + ": a bounded lattice needs bottom != top");
  }
  auto check = detail::check_partial_order(n, leq);
  if (!check.ok) throw Error(check.kind, name + ": " + check.message,
                             check.witness);
  if (!detail::find_bounds(n, leq)) {
    throw Error(ErrorKind::kNotBounded, name + ": no least or greatest element");
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (!detail::glb(n, leq, a, b)) {
        throw Error(ErrorKind::kNotALattice,
                    name + ": no unique meet of " + labels[a] + " and " +
                        labels[b],
                    {a, b});
      }
      if (!detail::lub(n, leq, a, b)) {
        throw Error(ErrorKind::kNotALattice,
                    name + ": no unique join of " + labels[a] + " and " +
                        labels[b],
                    {a, b});
      }
    }
  }
  return *try_from_order(std::move(name), std::move(labels), std::move(leq));
}

inline Lattice Lattice::from_tables(std::string name,
                                    std::vector<std::string> labels,
                                    std::vector<std::uint8_t> leq,
                                    std::vector<std::uint32_t> meet,
                                    std::vector<std::uint32_t> join) {
  const std::size_t n = labels.size();
  if (n < 2 || leq.size() != n * n || meet.size() != n * n ||
      join.size() != n * n) {
    throw Error(ErrorKind::kInvalidArgument, name + ": malformed tables");
  }
  auto bounds = detail::find_bounds(n, leq);
  if (!bounds) {
    throw Error(ErrorKind::kNotBounded, name + ": no least or greatest element");
  }
  for (Elem a = 0; a < n; ++a) {
    if (!leq[a * n + a] || meet[a * n + a] != a || join[a * n + a] != a) {
      throw Error(ErrorKind::kNotALattice, name + ": idempotence fails", {a});
    }
    for (Elem b = 0; b < n; ++b) {
      const Elem m = meet[a * n + b], j = join[a * n + b];
      const bool ok = m < n && j < n && m == meet[b * n + a] &&
                      j == join[b * n + a] && leq[m * n + a] &&
                      leq[m * n + b] && leq[a * n + j] && leq[b * n + j] &&
                      (leq[a * n + b] == (m == a)) &&
                      (leq[a * n + b] == (j == b));
      if (!ok) {
        throw Error(ErrorKind::kNotALattice,
                    name + ": inconsistent meet/join for " + labels[a] +
                        " and " + labels[b],
                    {a, b});
      }
    }
  }
  Lattice l;
  l.name_ = std::move(name);
  l.labels_ = std::move(labels);
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.bottom_ = bounds->first;
  l.top_ = bounds->second;
  return l;
}

// Constructs a lattice from its Hasse diagram. The order is the
// reflexive-transitive closure of `covers`; the declared bottom and top must
// be least and greatest.
inline Lattice build_from_covers(
    std::string name, std::vector<std::string> labels,
    std::string_view bottom, std::string_view top,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = labels.size();
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorKind::kDuplicateLabel,
                  name + ": duplicate element '" + labels[i] + "'", {i});
    }
  }
  auto lookup = [&](std::string_view l) {
    auto it = index.find(std::string(l));
    if (it == index.end()) {
      throw Error(ErrorKind::kUnknownLabel,
                  name + ": unknown element '" + std::string(l) + "'");
    }
    return it->second;
  };
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    const Elem a = lookup(lo), b = lookup(hi);
    if (a == b) {
      throw Error(ErrorKind::kCycleInCovers,
                  name + ": element '" + lo + "' covers itself", {a});
    }
    leq[a * n + b] = 1;
  }
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (Elem j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (leq[a * n + b] && leq[b * n + a]) {
        throw Error(ErrorKind::kCycleInCovers,
                    name + ": cycle through '" + labels[a] + "' and '" +
                        labels[b] + "'",
                    {a, b});
      }
    }
  }
  const Elem bot = lookup(bottom), tp = lookup(top);
  if (bot == tp) {
    throw Error(ErrorKind::kNotBounded, name + ": bottom equals top");
  }
  for (Elem x = 0; x < n; ++x) {
    if (!leq[bot * n + x]) {
      throw Error(ErrorKind::kNotBounded,
                  name + ": declared bottom '" + labels[bot] +
                      "' is not below '" + labels[x] + "'",
                  {bot, x});
    }
    if (!leq[x * n + tp]) {
      throw Error(ErrorKind::kNotBounded,
                  name + ": declared top '" + labels[tp] +
                      "' is not above '" + labels[x] + "'",
                  {tp, x});
    }
  }
  return Lattice::from_order(std::move(name), std::move(labels),
                             std::move(leq));
}

inline std::string dual_name(const std::string& name) {
  constexpr std::string_view kSuffix = "^op";
  if (name.size() >= kSuffix.size() &&
      name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) ==
          0) {
    return name.substr(0, name.size() - kSuffix.size());
  }
  return name + std::string(kSuffix);
}

// Order-reversed lattice on the same indices and labels.
inline Lattice dual(const Lattice& lattice) {
  const std::size_t n = lattice.n_;
  Lattice d;
  d.name_ = dual_name(lattice.name_);
  d.labels_ = lattice.labels_;
  d.n_ = n;
  d.leq_.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) d.leq_[a * n + b] = lattice.leq_[b * n + a];
  }
  d.meet_ = lattice.join_;
  d.join_ = lattice.meet_;
  d.bottom_ = lattice.top_;
  d.top_ = lattice.bottom_;
  return d;
}

inline LatticePtr share(Lattice lattice) {
  return std::make_shared<const Lattice>(std::move(lattice));
}

// The sublattice {x : lo <= x <= hi} together with its embedding.
struct Interval {
  Lattice sub;
  Elem lo = 0;
  Elem hi = 0;
  // Index in the interval -> index in the ambient lattice.
  std::vector<Elem> to_ambient;

  bool degenerate() const { return lo == hi; }
};

inline Interval interval(const Lattice& lattice, Elem lo, Elem hi) {
  if (!lattice.leq(lo, hi)) {
    throw Error(ErrorKind::kEmptyInterval,
                "[" + lattice.label(lo) + ", " + lattice.label(hi) +
                    "] is empty",
                {lo, hi});
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.leq(lo, x) && lattice.leq(x, hi)) members.push_back(x);
  }
  const std::size_t m = members.size();
  std::vector<Elem> local(lattice.size(), m);
  for (Elem i = 0; i < m; ++i) local[members[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(m * m);
  std::vector<std::uint32_t> meet(m * m), join(m * m);
  for (Elem i = 0; i < m; ++i) {
    labels.push_back(lattice.label(members[i]));
    for (Elem j = 0; j < m; ++j) {
      leq[i * m + j] = lattice.leq(members[i], members[j]);
      meet[i * m + j] = static_cast<std::uint32_t>(
          local[lattice.meet(members[i], members[j])]);
      join[i * m + j] = static_cast<std::uint32_t>(
          local[lattice.join(members[i], members[j])]);
    }
  }
  std::string name = lattice.name() + "[" + lattice.label(lo) + "," +
                     lattice.label(hi) + "]";
  if (m == 1) {
    return {Lattice::point(std::move(name), labels[0]), lo, hi, members};
  }
  return {Lattice::from_tables(std::move(name), std::move(labels),
                               std::move(leq), std::move(meet),
                               std::move(join)),
          lo, hi, std::move(members)};
}

// Lower/upper cover pairs (a, b): a < b with nothing strictly between.
inline std::vector<std::pair<Elem, Elem>> covers(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!lattice.lt(a, b)) continue;
      bool direct = true;
      for (Elem c = 0; c < n && direct; ++c) {
        direct = !(lattice.lt(a, c) && lattice.lt(c, b));
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::vector<Elem> atoms(const Lattice& lattice) {
  std::vector<Elem> out;
  for (auto [a, b] : covers(lattice)) {
    if (a == lattice.bottom()) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// a v (b ^ c) == (a v b) ^ c whenever a <= c.
inline bool is_modular(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      if (!lattice.leq(a, c)) continue;
      for (Elem b = 0; b < n; ++b) {
        if (lattice.join(a, lattice.meet(b, c)) !=
            lattice.meet(lattice.join(a, b), c)) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_distributive(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) !=
            lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline ElemSet complements_of(const Lattice& lattice, Elem a) {
  ElemSet out;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.meet(a, x) == lattice.bottom() &&
        lattice.join(a, x) == lattice.top()) {
      out.push_back(x);
    }
  }
  return out;
}

inline bool is_complement(const Lattice& lattice, Elem a) {
  return !complements_of(lattice, a).empty();
}

// Distributivity of the down-set [0, a], checked in place.
inline bool is_distributive_below(const Lattice& lattice, Elem a) {
  std::vector<Elem> down;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.leq(x, a)) down.push_back(x);
  }
  for (Elem x : down) {
    for (Elem y : down) {
      for (Elem z : down) {
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

// Elements whose down-interval is distributive. The ascending chain
// condition is automatic for finite lattices.
inline ElemSet cyclic_elements(const Lattice& lattice) {
  ElemSet out;
  for (Elem a = 0; a < lattice.size(); ++a) {
    if (is_distributive_below(lattice, a)) out.push_back(a);
  }
  return out;
}

inline bool is_cyclically_generated(const Lattice& lattice) {
  const ElemSet cyclic = cyclic_elements(lattice);
  for (Elem a = 0; a < lattice.size(); ++a) {
    Elem j = lattice.bottom();
    for (Elem c : cyclic) {
      if (lattice.leq(c, a)) j = lattice.join(j, c);
    }
    if (j != a) return false;
  }
  return true;
}

struct MonotoneMap {
  LatticePtr src;
  LatticePtr dst;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
};

inline bool validate_monotone(const MonotoneMap& map) {
  if (map.table.size() != map.src->size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "map table length differs from source size");
  }
  for (Elem x : map.table) {
    if (x >= map.dst->size()) {
      throw Error(ErrorKind::kInvalidArgument, "map value out of range");
    }
  }
  const std::size_t n = map.src->size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (map.src->leq(a, b) && !map.dst->leq(map.table[a], map.table[b])) {
        return false;
      }
    }
  }
  return true;
}

inline MonotoneMap identity_map(const LatticePtr& lattice) {
  return {lattice, lattice, lattice->elements()};
}

// Canonical form for isomorphism testing: the lexicographically least
// flattened order matrix over all relabellings that respect an
// isomorphism-invariant partition (down-set size, up-set size, cover
// degrees). `perm` receives the canonical order (new index -> old index).
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::uint8_t> matrix;
  std::vector<Elem> perm;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.matrix == b.matrix;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.matrix < b.matrix;
  }
};

inline CanonicalForm canonical_form(const Lattice& lattice,
                                    std::size_t budget = 10'000'000) {
  const std::size_t n = lattice.size();
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  std::vector<Key> key(n);
  std::vector<std::size_t> lower(n, 0), upper(n, 0);
  for (auto [a, b] : covers(lattice)) {
    ++upper[a];
    ++lower[b];
  }
  for (Elem a = 0; a < n; ++a) {
    std::size_t down = 0, up = 0;
    for (Elem x = 0; x < n; ++x) {
      down += lattice.leq(x, a);
      up += lattice.leq(a, x);
    }
    key[a] = {down, n - up, lower[a], upper[a]};
  }
  std::vector<Elem> order = lattice.elements();
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return key[a] < key[b]; });
  // Blocks of equal key; permute within each.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  double combos = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    for (std::size_t k = 2; k <= j - i; ++k) combos *= static_cast<double>(k);
    i = j;
  }
  if (combos > static_cast<double>(budget)) {
    throw Error(ErrorKind::kTooLarge,
                lattice.name() + ": canonical form search too large");
  }
  for (auto [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);

  CanonicalForm best;
  best.n = n;
  std::vector<std::uint8_t> cur(n * n);
  auto evaluate = [&] {
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) cur[i * n + j] = lattice.leq(order[i], order[j]);
    }
    if (best.matrix.empty() || cur < best.matrix) {
      best.matrix = cur;
      best.perm = order;
    }
  };
  // Odometer over per-block permutations.
  for (;;) {
    evaluate();
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == blocks.size()) break;
  }
  return best;
}

inline bool isomorphic(const Lattice& a, const Lattice& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// Relabels a lattice into canonical order.
inline Lattice canonical_lattice(const Lattice& lattice,
                                 const CanonicalForm& form) {
  std::vector<std::string> labels;
  for (Elem old : form.perm) labels.push_back(lattice.label(old));
  return Lattice::from_order(lattice.name(), std::move(labels), form.matrix);
}

}  // namespace latgal
