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

// Finite abelian groups as Z-modules: homomorphism groups, endomorphism
// rings, submodule lattices, the annihilator/image operators
//
//   l_U(X)  = {f in U | X <= Ker f}      r_M(Z)  = meet of Ker f, f in Z
//   l'_U(Y) = {f in U | Im f <= Y}       r'_N(Z) = sum of Im f, f in Z
//
// for U = Hom(M, N), S = End(M), T = End(N), and the Galois connections they
// form between submodule lattices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/essentiality.hpp"
#include "latgal/galois.hpp"
#include "latgal/lattice.hpp"

namespace latgal {

// Direct sum Z_{o_1} x ... x Z_{o_k}. Elements are mixed-radix indices with
// the first component least significant; no components is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() { init(); }

  explicit FinAbGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
    for (auto o : orders_) {
      if (o < 2) throw Error(ErrorKind::kInvalidArgument, "component orders must be >= 2");
    }
    init();
  }

  // "2,4" -> Z_2 x Z_4. "0" or "" is the trivial group.
  static FinAbGroup parse(std::string_view text) {
    std::vector<std::uint32_t> orders;
    if (text.empty() || text == "0") return FinAbGroup();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view part = text.substr(pos, end - pos);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos ||
          part.size() > 6) {
        throw Error(ErrorKind::kParseError,
                    "group:1:" + std::to_string(pos + 1) + ": expected a component order");
      }
      orders.push_back(static_cast<std::uint32_t>(std::stoul(std::string(part))));
      if (end == text.size()) break;
      pos = end + 1;
    }
    return FinAbGroup(std::move(orders));
  }

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  std::uint32_t digit(Elem x, std::size_t i) const {
    return static_cast<std::uint32_t>(x / place_[i] % orders_[i]);
  }
  // Component i generator.
  Elem generator(std::size_t i) const { return place_[i]; }

  std::vector<std::uint32_t> decode(Elem x) const {
    std::vector<std::uint32_t> t(rank());
    for (std::size_t i = 0; i < rank(); ++i) t[i] = digit(x, i);
    return t;
  }
  Elem encode(const std::vector<std::uint64_t>& t) const {
    Elem x = 0;
    for (std::size_t i = 0; i < rank(); ++i) x += (t[i] % orders_[i]) * place_[i];
    return x;
  }

  Elem add(Elem x, Elem y) const {
    if (!add_.empty()) return add_[x * size_ + y];
    Elem z = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      z += (digit(x, i) + digit(y, i)) % orders_[i] * place_[i];
    }
    return z;
  }
  Elem neg(Elem x) const {
    Elem z = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      z += (orders_[i] - digit(x, i)) % orders_[i] * place_[i];
    }
    return z;
  }
  Elem times(Elem x, std::uint64_t k) const {
    Elem z = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      z += (digit(x, i) * k) % orders_[i] * place_[i];
    }
    return z;
  }
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (auto o : orders_) e = std::lcm(e, std::uint64_t{o});
    return e;
  }
  // Additive order of x.
  std::uint64_t order_of(Elem x) const {
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::uint32_t d = digit(x, i);
      e = std::lcm(e, std::uint64_t{orders_[i] / std::gcd(orders_[i], d == 0 ? orders_[i] : d)});
    }
    return e;
  }

  std::string name() const {
    if (orders_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += "xZ";
      else s += "Z";
      s += std::to_string(orders_[i]);
    }
    return s;
  }
  std::string element_label(Elem x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(digit(x, i));
    }
    return s + ")";
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  void init() {
    size_ = 1;
    place_.clear();
    for (auto o : orders_) {
      place_.push_back(size_);
      size_ *= o;
      if (size_ > (std::size_t{1} << 20)) {
        throw Error(ErrorKind::kTooLarge, "group order exceeds 2^20");
      }
    }
    if (size_ <= 1024) {
      add_.resize(size_ * size_);
      for (Elem x = 0; x < size_; ++x) {
        for (Elem y = 0; y < size_; ++y) {
          Elem z = 0;
          for (std::size_t i = 0; i < rank(); ++i) {
            z += (digit(x, i) + digit(y, i)) % orders_[i] * place_[i];
          }
          add_[x * size_ + y] = static_cast<std::uint32_t>(z);
        }
      }
    }
  }

  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> place_;
  std::size_t size_ = 1;
  std::vector<std::uint32_t> add_;
};

// Subset of a finite group's elements.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) { return a.words_ < b.words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// A subgroup (or submodule) given by its element set.
struct Subgroup {
  Bits elements;
  std::size_t order() const { return elements.count(); }
};

namespace detail {

inline Bits sum_of(const FinAbGroup& g, const Bits& a, const Bits& b) {
  Bits out(g.size());
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (Elem x : ea) {
    for (Elem y : eb) out.set(g.add(x, y));
  }
  return out;
}

inline Bits single(std::size_t n, Elem x) {
  Bits b(n);
  b.set(x);
  return b;
}

// Least superset of `s` closed under addition.
inline Bits additive_closure(const FinAbGroup& g, Bits s) {
  s.set(0);
  for (;;) {
    Bits next = sum_of(g, s, s);
    if (next == s) return s;
    s = next;
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultGroupBound = 64;
inline constexpr std::size_t kDefaultLatticeBound = 600;

// Submodules of g under a ring acting through the given element maps. The
// ring must be closed under addition and contain the identity, so the
// cyclic submodule of x is {r(x)}. Every submodule is a sum of cyclic ones.
// Sorted by (order, element list).
inline std::vector<Subgroup> submodules(const FinAbGroup& g,
                                        const std::vector<std::vector<Elem>>& ring,
                                        std::size_t max_count = kDefaultLatticeBound) {
  const std::size_t n = g.size();
  std::vector<Bits> cyclic;
  {
    std::vector<Bits> seen;
    for (Elem x = 0; x < n; ++x) {
      Bits c(n);
      c.set(0);
      for (const auto& r : ring) c.set(r[x]);
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    }
    cyclic = std::move(seen);
  }
  std::map<Bits, bool> found;
  std::vector<Bits> queue = {detail::single(n, 0)};
  found[queue.front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Bits& c : cyclic) {
      if (c.subset_of(queue[i])) continue;
      Bits s = detail::sum_of(g, queue[i], c);
      if (found.emplace(s, true).second) {
        queue.push_back(s);
        if (queue.size() > max_count) {
          throw Error(ErrorKind::kTooLarge,
                      "more than " + std::to_string(max_count) + " submodules");
        }
      }
    }
  }
  std::vector<Subgroup> out;
  for (auto& b : queue) out.push_back({b});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    const auto ca = a.order(), cb = b.order();
    if (ca != cb) return ca < cb;
    return a.elements.elements() < b.elements.elements();
  });
  return out;
}

// Integer multiples as the acting ring.
inline std::vector<std::vector<Elem>> integer_action(const FinAbGroup& g) {
  std::vector<std::vector<Elem>> ring;
  const std::uint64_t e = g.exponent();
  for (std::uint64_t k = 0; k < e; ++k) {
    std::vector<Elem> t(g.size());
    for (Elem x = 0; x < g.size(); ++x) t[x] = g.times(x, k);
    ring.push_back(std::move(t));
  }
  return ring;
}

inline std::vector<Subgroup> subgroups(const FinAbGroup& g,
                                       std::size_t bound = kDefaultGroupBound) {
  if (g.size() > bound) {
    throw Error(ErrorKind::kTooLarge, g.name() + " has more than " +
                                          std::to_string(bound) + " elements");
  }
  return submodules(g, integer_action(g));
}

// Lattice of submodules ordered by inclusion; meet is intersection and join
// the least submodule containing both (their sum). Labels: bottom, then
// prefix1.., then top. A trivial group gives the one-element structure.
struct SubmoduleLattice {
  LatticePtr lattice;
  std::vector<Subgroup> members;  // by lattice index

  std::optional<Elem> index_of(const Bits& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::map<Bits, Elem> index_;
};

inline SubmoduleLattice make_submodule_lattice(std::vector<Subgroup> members,
                                               const std::string& name,
                                               const std::string& prefix,
                                               const std::string& top_label) {
  SubmoduleLattice s;
  const std::size_t n = members.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "0" : (i + 1 == n ? top_label : prefix + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) s.index_[members[i].elements] = i;
  if (n == 1) {
    s.lattice = share(Lattice::point(name, "0"));
    s.members = std::move(members);
    return s;
  }
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = members[i].elements.subset_of(members[j].elements);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Bits inter = members[i].elements & members[j].elements;
      auto m = s.index_.find(inter);
      if (m == s.index_.end()) {
        throw Error(ErrorKind::kNotALattice, name + ": intersection is not a member");
      }
      std::size_t k = j;
      while (k < n && !(leq[i * n + k] && leq[j * n + k])) ++k;
      if (k == n) throw Error(ErrorKind::kNotALattice, name + ": no join");
      meet[i * n + j] = meet[j * n + i] = static_cast<std::uint32_t>(m->second);
      join[i * n + j] = join[j * n + i] = static_cast<std::uint32_t>(k);
    }
  }
  s.lattice = share(Lattice::from_tables(name, std::move(labels), std::move(leq),
                                         std::move(meet), std::move(join)));
  s.members = std::move(members);
  return s;
}

inline SubmoduleLattice subgroup_lattice_of(const FinAbGroup& g,
                                            std::size_t bound = kDefaultGroupBound) {
  return make_submodule_lattice(subgroups(g, bound), "L(" + g.name() + ")", "H", "G");
}

inline Lattice subgroup_lattice(const FinAbGroup& g,
                                std::size_t bound = kDefaultGroupBound) {
  return *subgroup_lattice_of(g, bound).lattice;
}

// Homomorphism given by the images of the source component generators:
// matrix[i * cols + j] is the coefficient of target component j in the image
// of source generator i.
struct Hom {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> matrix;

  std::uint32_t at(std::size_t i, std::size_t j) const { return matrix[i * cols + j]; }
  friend bool operator==(const Hom&, const Hom&) = default;
};

// Hom(M, N) as a finite abelian group: entry (i, j) ranges over the
// multiples of n_j / gcd(m_i, n_j), so Hom(M, N) = sum of Z_gcd(m_i, n_j).
class HomSpace {
 public:
  static constexpr std::size_t kDefaultBound = 4096;

  HomSpace(FinAbGroup src, FinAbGroup dst, std::size_t bound = kDefaultBound)
      : src_(std::move(src)), dst_(std::move(dst)) {
    std::vector<std::uint32_t> radix;
    for (std::size_t i = 0; i < src_.rank(); ++i) {
      for (std::size_t j = 0; j < dst_.rank(); ++j) {
        const std::uint32_t g = std::gcd(src_.orders()[i], dst_.orders()[j]);
        step_.push_back(dst_.orders()[j] / g);
        if (g > 1) {
          slot_.push_back(radix.size());
          radix.push_back(g);
        } else {
          slot_.push_back(kNoSlot);
        }
      }
    }
    std::size_t size = 1;
    for (auto r : radix) {
      size *= r;
      if (size > bound) {
        throw Error(ErrorKind::kTooLarge, "Hom(" + src_.name() + ", " + dst_.name() +
                                              ") exceeds " + std::to_string(bound));
      }
    }
    group_ = FinAbGroup(std::move(radix));
    tables_.resize(group_.size());
    for (Elem u = 0; u < group_.size(); ++u) {
      const Hom h = hom(u);
      std::vector<Elem>& t = tables_[u];
      t.resize(src_.size());
      for (Elem x = 0; x < src_.size(); ++x) {
        std::vector<std::uint64_t> y(dst_.rank(), 0);
        for (std::size_t i = 0; i < src_.rank(); ++i) {
          const std::uint64_t xi = src_.digit(x, i);
          for (std::size_t j = 0; j < dst_.rank(); ++j) y[j] += xi * h.at(i, j);
        }
        t[x] = dst_.encode(y);
      }
    }
  }

  const FinAbGroup& src() const { return src_; }
  const FinAbGroup& dst() const { return dst_; }
  // The additive group of homomorphisms; element u is hom(u).
  const FinAbGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }

  Hom hom(Elem u) const {
    Hom h{src_.rank(), dst_.rank(), std::vector<std::uint32_t>(src_.rank() * dst_.rank(), 0)};
    for (std::size_t e = 0; e < step_.size(); ++e) {
      if (slot_[e] != kNoSlot) h.matrix[e] = group_.digit(u, slot_[e]) * step_[e];
    }
    return h;
  }

  // Element map of hom u.
  const std::vector<Elem>& apply(Elem u) const { return tables_[u]; }
  Elem apply(Elem u, Elem x) const { return tables_[u][x]; }

  // The homomorphism sending generator i to images[i]; nullopt if that is
  // not well defined.
  std::optional<Elem> from_images(const std::vector<Elem>& images) const {
    std::vector<std::uint64_t> digits(group_.rank(), 0);
    for (std::size_t i = 0; i < src_.rank(); ++i) {
      for (std::size_t j = 0; j < dst_.rank(); ++j) {
        const std::size_t e = i * dst_.rank() + j;
        const std::uint32_t v = dst_.digit(images[i], j);
        if (v % step_[e] != 0) return std::nullopt;
        if (slot_[e] != kNoSlot) digits[slot_[e]] = v / step_[e];
      }
    }
    return group_.encode(digits);
  }

  Elem zero() const { return 0; }
  bool is_zero(Elem u) const { return u == 0; }

  Bits kernel(Elem u) const {
    Bits k(src_.size());
    for (Elem x = 0; x < src_.size(); ++x) {
      if (tables_[u][x] == 0) k.set(x);
    }
    return k;
  }
  Bits image(Elem u) const {
    Bits im(dst_.size());
    for (Elem x = 0; x < src_.size(); ++x) im.set(tables_[u][x]);
    return im;
  }

 private:
  static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

  FinAbGroup src_, dst_, group_;
  std::vector<std::uint32_t> step_;
  std::vector<std::size_t> slot_;
  std::vector<std::vector<Elem>> tables_;
};

inline std::vector<Hom> hom_group(const FinAbGroup& m, const FinAbGroup& n) {
  const HomSpace h(m, n);
  std::vector<Hom> out;
  for (Elem u = 0; u < h.size(); ++u) out.push_back(h.hom(u));
  return out;
}

// g . f for f in Hom(X, Y), g in Hom(Y, Z).
inline Elem compose(const HomSpace& xz, const HomSpace& yz, Elem g,
                    const HomSpace& xy, Elem f) {
  std::vector<Elem> images(xy.src().rank());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = yz.apply(g, xy.apply(f, xy.src().generator(i)));
  }
  auto r = xz.from_images(images);
  if (!r) throw Error(ErrorKind::kTheoremViolation, "composite is not a homomorphism");
  return *r;
}

// End(M) with composition.
struct EndRing {
  HomSpace space;
  // product[s * size + t] = s . t
  std::vector<Elem> product;
  Elem identity = 0;

  explicit EndRing(const FinAbGroup& m) : space(m, m) {
    const std::size_t n = space.size();
    product.resize(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) product[s * n + t] = compose(space, space, s, space, t);
    }
    std::vector<Elem> gens(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) gens[i] = m.generator(i);
    identity = *space.from_images(gens);
  }
  std::size_t size() const { return space.size(); }
  Elem mul(Elem s, Elem t) const { return product[s * size() + t]; }
};

inline EndRing end_ring(const FinAbGroup& m) { return EndRing(m); }

// Isomorphism type of a finite abelian group given by element orders: the
// number of elements killed by p^k determines the primary decomposition.
inline FinAbGroup group_from_order_counts(std::size_t size,
                                          const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint32_t> parts;
  std::size_t rest = size;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::size_t pk_total = 1;
    while (rest % p == 0) {
      rest /= p;
      pk_total *= p;
    }
    // c[k] = #{x : p^k x = 0} within the p-part.
    std::vector<std::size_t> c = {1};
    std::uint64_t pk = 1;
    while (c.back() < pk_total) {
      pk *= p;
      std::size_t cnt = 0;
      for (auto o : orders) {
        std::uint64_t op = 1;
        while (o % p == 0) {
          o /= p;
          op *= p;
        }
        if (pk % op == 0) ++cnt;
      }
      c.push_back(cnt);
    }
    // Factors of order >= p^k: log_p(c[k] / c[k-1]).
    auto logp = [p](std::size_t v) {
      std::size_t e = 0;
      while (v > 1) {
        v /= p;
        ++e;
      }
      return e;
    };
    std::vector<std::size_t> at_least(c.size(), 0);
    for (std::size_t k = 1; k < c.size(); ++k) at_least[k] = logp(c[k] / c[k - 1]);
    for (std::size_t k = 1; k < c.size(); ++k) {
      const std::size_t next = k + 1 < c.size() ? at_least[k + 1] : 0;
      std::uint32_t q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= static_cast<std::uint32_t>(p);
      for (std::size_t i = 0; i < at_least[k] - next; ++i) parts.push_back(q);
    }
  }
  std::sort(parts.begin(), parts.end());
  return FinAbGroup(std::move(parts));
}

// Isomorphism type of a subgroup D of g.
inline FinAbGroup subgroup_type(const FinAbGroup& g, const Bits& d) {
  std::vector<std::uint64_t> orders;
  for (Elem x : d.elements()) orders.push_back(g.order_of(x));
  return group_from_order_counts(orders.size(), orders);
}

// Isomorphism type of g / c.
inline FinAbGroup quotient_type(const FinAbGroup& g, const Bits& c) {
  const std::size_t csize = c.count();
  std::vector<std::uint64_t> orders;
  std::vector<bool> seen(g.size(), false);
  const auto celems = c.elements();
  for (Elem x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    for (Elem y : celems) seen[g.add(x, y)] = true;
    std::uint64_t k = 1;
    Elem kx = x;
    while (!c.test(kx)) {
      kx = g.add(kx, x);
      ++k;
    }
    orders.push_back(k);
  }
  (void)csize;
  return group_from_order_counts(orders.size(), orders);
}

// Everything derived from a pair (M, N).
class ModulePair {
 public:
  ModulePair(FinAbGroup m, FinAbGroup n, std::size_t bound = 16)
      : m_(std::move(m)), n_(std::move(n)), u_(m_, n_), s_(m_), t_(n_) {
    if (m_.size() > bound || n_.size() > bound) {
      throw Error(ErrorKind::kTooLarge, "module pair exceeds the size bound " +
                                            std::to_string(bound));
    }
    lm_ = subgroup_lattice_of(m_);
    ln_ = subgroup_lattice_of(n_);
    // T acts on U by post-composition, S by pre-composition.
    std::vector<std::vector<Elem>> t_action(t_.size()), s_action(s_.size());
    for (Elem t = 0; t < t_.size(); ++t) {
      t_action[t].resize(u_.size());
      for (Elem f = 0; f < u_.size(); ++f) {
        t_action[t][f] = compose(u_, t_.space, t, u_, f);
      }
    }
    for (Elem s = 0; s < s_.size(); ++s) {
      s_action[s].resize(u_.size());
      for (Elem f = 0; f < u_.size(); ++f) {
        s_action[s][f] = compose(u_, u_, f, s_.space, s);
      }
    }
    t_action_ = std::move(t_action);
    s_action_ = std::move(s_action);
    t_lat_ = make_submodule_lattice(submodules(u_.group(), t_action_),
                                    "L_T(U)", "Z", "U");
    s_lat_ = make_submodule_lattice(submodules(u_.group(), s_action_),
                                    "L_S(U)", "Z", "U");
  }

  const FinAbGroup& M() const { return m_; }
  const FinAbGroup& N() const { return n_; }
  const HomSpace& U() const { return u_; }
  const EndRing& S() const { return s_; }
  const EndRing& T() const { return t_; }
  const SubmoduleLattice& lattice_M() const { return lm_; }
  const SubmoduleLattice& lattice_N() const { return ln_; }
  const SubmoduleLattice& T_lattice() const { return t_lat_; }
  const SubmoduleLattice& S_lattice() const { return s_lat_; }

  // Closed under the left T-action (post-composition)?
  bool t_closed(const Bits& z) const { return closed_under(z, t_action_); }
  bool s_closed(const Bits& z) const { return closed_under(z, s_action_); }

  Bits l_U(const Bits& x) const {
    Bits out(u_.size());
    const auto xs = x.elements();
    for (Elem f = 0; f < u_.size(); ++f) {
      if (std::all_of(xs.begin(), xs.end(), [&](Elem v) { return u_.apply(f, v) == 0; })) {
        out.set(f);
      }
    }
    return out;
  }
  Bits r_M(const Bits& z) const {
    Bits out(m_.size());
    const auto fs = z.elements();
    for (Elem x = 0; x < m_.size(); ++x) {
      if (std::all_of(fs.begin(), fs.end(), [&](Elem f) { return u_.apply(f, x) == 0; })) {
        out.set(x);
      }
    }
    return out;
  }
  Bits l_prime_U(const Bits& y) const {
    Bits out(u_.size());
    for (Elem f = 0; f < u_.size(); ++f) {
      if (u_.image(f).subset_of(y)) out.set(f);
    }
    return out;
  }
  Bits r_prime_N(const Bits& z) const {
    Bits gens(n_.size());
    for (Elem f : z.elements()) {
      for (Elem x = 0; x < m_.size(); ++x) gens.set(u_.apply(f, x));
    }
    return detail::additive_closure(n_, gens);
  }

  // alpha = r_M : L_T(U) -> L(M)^op, beta = l_U.
  GaloisConnection connection_rm_lu() const {
    LatticePtr a = t_lat_.lattice;
    LatticePtr b = share(dual(*lm_.lattice));
    std::vector<Elem> alpha(a->size()), beta(b->size());
    for (Elem z = 0; z < a->size(); ++z) {
      alpha[z] = lookup(lm_, r_M(t_lat_.members[z].elements), "r_M");
    }
    for (Elem x = 0; x < b->size(); ++x) {
      const Bits l = l_U(lm_.members[x].elements);
      if (!t_closed(l)) throw Error(ErrorKind::kNotTClosed, "l_U(X) is not T-closed");
      beta[x] = lookup(t_lat_, l, "l_U");
    }
    return build_connection(MonotoneMap{a, b, std::move(alpha)},
                            MonotoneMap{b, a, std::move(beta)});
  }

  // alpha = r'_N : L_S(U) -> L(N), beta = l'_U.
  GaloisConnection connection_rn_lu() const {
    LatticePtr a = s_lat_.lattice;
    LatticePtr b = ln_.lattice;
    std::vector<Elem> alpha(a->size()), beta(b->size());
    for (Elem z = 0; z < a->size(); ++z) {
      alpha[z] = lookup(ln_, r_prime_N(s_lat_.members[z].elements), "r'_N");
    }
    for (Elem y = 0; y < b->size(); ++y) {
      const Bits l = l_prime_U(ln_.members[y].elements);
      if (!s_closed(l)) throw Error(ErrorKind::kNotTClosed, "l'_U(Y) is not S-closed");
      beta[y] = lookup(s_lat_, l, "l'_U");
    }
    return build_connection(MonotoneMap{a, b, std::move(alpha)},
                            MonotoneMap{b, a, std::move(beta)});
  }

  // Hom(M, D) != 0 for every nonzero D <= N, with Hom computed on the
  // isomorphism type of D.
  bool is_retractable_module() const {
    for (const auto& d : ln_.members) {
      if (d.order() == 1) continue;
      if (HomSpace(m_, subgroup_type(n_, d.elements)).size() == 1) return false;
    }
    return true;
  }
  // Same, as nonzero homs M -> N landing in D.
  bool is_retractable_module_by_images() const {
    for (const auto& d : ln_.members) {
      if (d.order() == 1) continue;
      if (l_prime_U(d.elements).count() == 1) return false;
    }
    return true;
  }

  // Hom(M/C, N) != 0 for every proper C < M, with M/C built from its
  // invariant decomposition.
  bool is_coretractable_module() const {
    for (const auto& c : lm_.members) {
      if (c.order() == m_.size()) continue;
      if (HomSpace(quotient_type(m_, c.elements), n_).size() == 1) return false;
    }
    return true;
  }
  // Same, as nonzero homs M -> N killing C.
  bool is_coretractable_module_by_kernels() const {
    for (const auto& c : lm_.members) {
      if (c.order() == m_.size()) continue;
      if (l_U(c.elements).count() == 1) return false;
    }
    return true;
  }

  // M is N-semi-projective: for every D <= N, every epimorphism g : N -> D
  // and every h : M -> D there is gamma : M -> N with g gamma = h.
  bool is_semi_projective() const {
    for (const auto& d : ln_.members) {
      const Bits targets = l_prime_U(d.elements);
      for (Elem g = 0; g < t_.size(); ++g) {
        if (!(t_.space.image(g) == d.elements)) continue;
        Bits reach(u_.size());
        for (Elem gamma = 0; gamma < u_.size(); ++gamma) reach.set(t_action_[g][gamma]);
        if (!targets.subset_of(reach)) return false;
      }
    }
    return true;
  }

  // N is M-semi-injective: for every C <= M, every monomorphism f : M/C -> M
  // and every h : M/C -> N there is gamma : M -> N with gamma f = h. Maps
  // out of M/C are maps out of M killing C; f is an endomorphism of M with
  // kernel exactly C.
  bool is_semi_injective() const {
    for (const auto& c : lm_.members) {
      const Bits targets = l_U(c.elements);
      for (Elem f = 0; f < s_.size(); ++f) {
        if (!(s_.space.kernel(f) == c.elements)) continue;
        Bits reach(u_.size());
        for (Elem gamma = 0; gamma < u_.size(); ++gamma) reach.set(s_action_[f][gamma]);
        if (!targets.subset_of(reach)) return false;
      }
    }
    return true;
  }

 private:
  static bool closed_under(const Bits& z, const std::vector<std::vector<Elem>>& ring) {
    const auto zs = z.elements();
    for (const auto& r : ring) {
      for (Elem f : zs) {
        if (!z.test(r[f])) return false;
      }
    }
    return true;
  }

  static Elem lookup(const SubmoduleLattice& l, const Bits& b, const char* what) {
    auto i = l.index_of(b);
    if (!i) {
      throw Error(ErrorKind::kTheoremViolation,
                  std::string(what) + " did not produce a submodule");
    }
    return *i;
  }

  FinAbGroup m_, n_;
  HomSpace u_;
  EndRing s_, t_;
  SubmoduleLattice lm_, ln_, t_lat_, s_lat_;
  std::vector<std::vector<Elem>> t_action_, s_action_;
};

// Groups of order 2..max_order up to isomorphism, as primary decompositions.
inline std::vector<FinAbGroup> abelian_groups_up_to(std::size_t max_order) {
  std::vector<FinAbGroup> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    // Partitions of each prime exponent.
    std::vector<std::vector<std::uint32_t>> choices = {{}};
    std::size_t rest = n;
    for (std::uint32_t p = 2; rest > 1; ++p) {
      if (rest % p) continue;
      std::size_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      std::vector<std::vector<std::uint32_t>> parts;
      std::vector<std::uint32_t> cur;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max) {
        if (left == 0) {
          parts.push_back(cur);
          return;
        }
        for (std::size_t k = std::min(left, max); k >= 1; --k) {
          std::uint32_t q = 1;
          for (std::size_t i = 0; i < k; ++i) q *= p;
          cur.push_back(q);
          rec(left - k, k);
          cur.pop_back();
        }
      };
      rec(e, e);
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& c : choices) {
        for (const auto& q : parts) {
          auto merged = c;
          merged.insert(merged.end(), q.begin(), q.end());
          next.push_back(merged);
        }
      }
      choices = std::move(next);
    }
    for (auto& c : choices) {
      std::sort(c.begin(), c.end());
      out.emplace_back(c);
    }
  }
  return out;
}

}  // namespace latgal
