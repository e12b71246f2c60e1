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

// Essential and closed elements, closures, uniform/hollow dimension and the
// extending property on a finite lattice. The dual ("co-") notions are the
// primal predicates evaluated on the order dual; indices are shared between a
// lattice and its dual, so no translation is needed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/lattice.hpp"

namespace latgal {

// Unchecked form: a <= a_prime is assumed.
inline bool essential_below(const Lattice& l, Elem a, Elem a_prime) {
  for (Elem x = 0; x < l.size(); ++x) {
    if (x != l.bottom() && l.leq(x, a_prime) && l.meet(a, x) == l.bottom()) {
      return false;
    }
  }
  return true;
}

// a essential in [0, a_prime]: a ^ x = 0 forces x = 0 for every x <= a_prime.
inline bool is_essential_in(const Lattice& l, Elem a, Elem a_prime) {
  if (!l.leq(a, a_prime)) {
    throw Error(ErrorKind::kNotBelow,
                l.label(a) + " is not below " + l.label(a_prime), {a, a_prime});
  }
  return essential_below(l, a, a_prime);
}

inline bool is_essential(const Lattice& l, Elem a) {
  return essential_below(l, a, l.top());
}

// Essentiality in the whole lattice tested against cyclic elements only.
// Valid on cyclically generated lattices.
inline bool essential_via_cyclic(const Lattice& l, Elem a) {
  if (!is_cyclically_generated(l)) {
    throw Error(ErrorKind::kNotCyclicallyGenerated,
                l.name() + " is not cyclically generated");
  }
  for (Elem x : cyclic_elements(l)) {
    if (x != l.bottom() && l.meet(a, x) == l.bottom()) return false;
  }
  return true;
}

// Essentiality for every comparable pair, closed elements and closure sets,
// computed once in O(n^3).
class EssentialityTable {
 public:
  explicit EssentialityTable(const Lattice& l)
      : n_(l.size()), essential_(n_ * n_, 0), closed_(n_, 1), closures_(n_) {
    for (Elem a = 0; a < n_; ++a) {
      for (Elem c = 0; c < n_; ++c) {
        if (l.leq(a, c)) essential_[a * n_ + c] = essential_below(l, a, c);
        if (a != c && essential_[a * n_ + c]) closed_[a] = 0;
      }
    }
    for (Elem a = 0; a < n_; ++a) {
      if (closed_[a]) closed_set_.push_back(a);
      for (Elem c = 0; c < n_; ++c) {
        if (essential_[a * n_ + c] && closed_[c]) closures_[a].push_back(c);
      }
    }
  }

  // False when a is not below c.
  bool essential(Elem a, Elem c) const { return essential_[a * n_ + c] != 0; }
  bool closed(Elem a) const { return closed_[a] != 0; }
  const ElemSet& closed_elements() const { return closed_set_; }
  const ElemSet& closures(Elem a) const { return closures_[a]; }
  bool unique_closure(Elem a) const { return closures_[a].size() == 1; }
  bool uc() const {
    return std::all_of(closures_.begin(), closures_.end(),
                       [](const ElemSet& c) { return c.size() == 1; });
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> essential_;
  std::vector<std::uint8_t> closed_;
  ElemSet closed_set_;
  std::vector<ElemSet> closures_;
};

inline bool is_closed(const Lattice& l, Elem a) {
  for (Elem b = 0; b < l.size(); ++b) {
    if (l.lt(a, b) && essential_below(l, a, b)) return false;
  }
  return true;
}

inline ElemSet closed_elements(const Lattice& l) {
  return EssentialityTable(l).closed_elements();
}

struct ClosureSet {
  Elem element = 0;
  ElemSet closures;
};

// Every closed c >= a with a essential in [0, c]. May be empty when the
// lattice is not modular.
inline ClosureSet closures_of(const Lattice& l, Elem a) {
  ClosureSet out{a, {}};
  for (Elem c = 0; c < l.size(); ++c) {
    if (l.leq(a, c) && essential_below(l, a, c) && is_closed(l, c)) {
      out.closures.push_back(c);
    }
  }
  return out;
}

inline bool has_unique_closure(const Lattice& l, Elem a) {
  return closures_of(l, a).closures.size() == 1;
}

inline Elem unique_closure(const Lattice& l, Elem a) {
  ClosureSet c = closures_of(l, a);
  if (c.closures.empty()) {
    throw Error(ErrorKind::kNoClosure, l.label(a) + " has no closure", {a});
  }
  if (c.closures.size() > 1) {
    throw Error(ErrorKind::kMultipleClosures,
                l.label(a) + " has " + std::to_string(c.closures.size()) +
                    " closures",
                c.closures);
  }
  return c.closures.front();
}

inline bool is_UC(const Lattice& l) { return EssentialityTable(l).uc(); }

inline bool is_uniform(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    if (a != l.bottom() && !is_essential(l, a)) return false;
  }
  return true;
}

// Y (no bottom) with (join of S) ^ x = 0 for every S subset of Y and x in
// Y \ S. The join grows with S, so it suffices to test S = Y \ {x}.
inline bool is_join_independent(const Lattice& l, const std::vector<Elem>& ys) {
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] == l.bottom()) return false;
    Elem rest = l.bottom();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (j != i) rest = l.join(rest, ys[j]);
    }
    if (l.meet(rest, ys[i]) != l.bottom()) return false;
  }
  return true;
}

// (b1 v ... v b(k-1)) ^ bk = 0 for k >= 2, all bi nonzero.
inline bool join_independent_incremental(const Lattice& l,
                                         const std::vector<Elem>& ordered) {
  Elem prefix = l.bottom();
  for (Elem b : ordered) {
    if (b == l.bottom() || l.meet(prefix, b) != l.bottom()) return false;
    prefix = l.join(prefix, b);
  }
  return true;
}

struct DimensionResult {
  std::size_t value = 0;
  // Lexicographically least join-independent set of maximum size.
  ElemSet witness;
};

namespace detail {

// Largest join-independent set of atoms. Replacing each member of an
// independent set by an atom below it keeps it independent, so this is the
// uniform dimension.
inline std::size_t max_independent_atoms(const Lattice& l) {
  const std::vector<Elem> at = atoms(l);
  std::size_t best = 0;
  std::vector<Elem> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    best = std::max(best, chosen.size());
    if (chosen.size() + (at.size() - i) <= best) return;
    for (std::size_t k = i; k < at.size(); ++k) {
      chosen.push_back(at[k]);
      if (is_join_independent(l, chosen)) dfs(k + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

}  // namespace detail

inline DimensionResult uniform_dimension(const Lattice& l) {
  if (l.degenerate()) return {};
  DimensionResult r;
  r.value = detail::max_independent_atoms(l);
  std::vector<Elem> chosen;
  // Subsets of independent sets are independent, so extension-only search in
  // increasing index order yields the lexicographically least witness first.
  std::function<bool(Elem)> dfs = [&](Elem from) {
    if (chosen.size() == r.value) return true;
    for (Elem x = from; x < l.size(); ++x) {
      if (x == l.bottom()) continue;
      chosen.push_back(x);
      if (is_join_independent(l, chosen) && dfs(x + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0);
  r.witness = chosen;
  return r;
}

inline DimensionResult hollow_dimension(const Lattice& l) {
  return uniform_dimension(dual(l));
}

namespace detail {

// Every a has a complement a' with a essential in [0, a'].
inline bool extending_by_complements(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    bool found = false;
    for (Elem c = 0; c < l.size() && !found; ++c) {
      found = l.leq(a, c) && is_complement(l, c) && essential_below(l, a, c);
    }
    if (!found) return false;
  }
  return true;
}

inline bool extending_by_closed(const Lattice& l) {
  const EssentialityTable table(l);
  for (Elem a : table.closed_elements()) {
    if (!is_complement(l, a)) return false;
  }
  return true;
}

}  // namespace detail

// Both characterisations are evaluated; they must agree on modular lattices.
inline bool is_extending(const Lattice& l) {
  if (!is_modular(l)) {
    throw Error(ErrorKind::kNotModular, l.name() + " is not modular");
  }
  const bool by_complements = detail::extending_by_complements(l);
  const bool by_closed = detail::extending_by_closed(l);
  if (by_complements != by_closed) {
    throw Error(ErrorKind::kTheoremViolation,
                l.name() + ": the two extending characterisations disagree");
  }
  return by_closed;
}

// s small in [0, hi]: s v y = hi forces y = hi for y <= hi.
inline bool is_small_in(const Lattice& l, Elem s, Elem hi) {
  if (!l.leq(s, hi)) {
    throw Error(ErrorKind::kNotBelow, l.label(s) + " is not below " + l.label(hi),
                {s, hi});
  }
  for (Elem y = 0; y < l.size(); ++y) {
    if (l.leq(y, hi) && y != hi && l.join(s, y) == hi) return false;
  }
  return true;
}

// Supplements of a: elements x minimal with a v x = 1.
inline ElemSet supplements_of(const Lattice& l, Elem a) {
  ElemSet out;
  for (Elem x = 0; x < l.size(); ++x) {
    if (l.join(a, x) != l.top()) continue;
    bool minimal = true;
    for (Elem y = 0; y < l.size() && minimal; ++y) {
      minimal = !(l.lt(y, x) && l.join(a, y) == l.top());
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

// Every a has a supplement x whose overlap a ^ x is small in [0, x].
inline bool is_amply_supplemented_small_overlap(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    bool found = false;
    for (Elem x : supplements_of(l, a)) {
      if (is_small_in(l, l.meet(a, x), x)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Whenever a v b = 1, a has a supplement below b.
inline bool is_amply_supplemented_standard(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    const ElemSet sup = supplements_of(l, a);
    for (Elem b = 0; b < l.size(); ++b) {
      if (l.join(a, b) != l.top()) continue;
      const bool found = std::any_of(sup.begin(), sup.end(),
                                     [&](Elem x) { return l.leq(x, b); });
      if (!found) return false;
    }
  }
  return true;
}

// Dual notions, each computed as the primal notion on the order dual.
class DualView {
 public:
  explicit DualView(const Lattice& l) : dual_(dual(l)) {}

  const Lattice& dual_lattice() const { return dual_; }

  // a coessential in [a_prime, 1]: a v x = 1 forces x = 1 for x >= a_prime.
  bool is_coessential_in(Elem a, Elem a_prime) const {
    if (!dual_.leq(a, a_prime)) {
      throw Error(ErrorKind::kNotBelow,
                  dual_.label(a_prime) + " is not below " + dual_.label(a),
                  {a, a_prime});
    }
    return essential_below(dual_, a, a_prime);
  }
  bool is_coclosed(Elem a) const { return is_closed(dual_, a); }
  ElemSet coclosed_elements() const { return closed_elements(dual_); }
  ClosureSet coclosures_of(Elem a) const { return closures_of(dual_, a); }
  Elem unique_coclosure(Elem a) const { return unique_closure(dual_, a); }
  bool is_UCC() const { return is_UC(dual_); }
  bool is_hollow() const { return is_uniform(dual_); }
  bool is_lifting() const { return is_extending(dual_); }
  DimensionResult hollow_dimension() const { return uniform_dimension(dual_); }

 private:
  Lattice dual_;
};

inline DualView dual_notion_suite(const Lattice& l) { return DualView(l); }

}  // namespace latgal
