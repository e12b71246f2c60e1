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

#include <string>
#include <vector>

#include "latgal/galois.hpp"
#include "latgal/io.hpp"
#include "latgal/lattice.hpp"

namespace latgal::testing {

inline std::string fixture_path(const std::string& file) {
  return std::string(LATGAL_FIXTURES) + "/" + file;
}

inline LatticePtr fixture_lattice(const std::string& stem) {
  return share(read_lattice_file(fixture_path(stem + ".lat")));
}

inline GaloisConnection fixture_connection(const std::string& a_stem,
                                           const std::string& b_stem,
                                           const std::string& alpha_stem,
                                           const std::string& beta_stem) {
  LatticePtr a = fixture_lattice(a_stem);
  LatticePtr b = a_stem == b_stem ? a : fixture_lattice(b_stem);
  return build_connection(
      resolve_map(read_map_file(fixture_path(alpha_stem + ".map")), a, b),
      resolve_map(read_map_file(fixture_path(beta_stem + ".map")), b, a));
}

// The worked examples.
inline GaloisConnection grid9_connection() {
  return fixture_connection("grid9", "grid9", "grid9_alpha", "grid9_beta");
}
inline GaloisConnection z2z4_connection() {
  return fixture_connection("z2z4", "z2z4", "z2z4_alpha", "z2z4_beta");
}
inline GaloisConnection z2z4_identity() {
  return fixture_connection("z2z4", "z2z4", "z2z4_id", "z2z4_id");
}
inline GaloisConnection ab1_connection() {
  return fixture_connection("latA", "latB", "ab1_alpha", "ab1_beta");
}
inline GaloisConnection ab2_connection() {
  return fixture_connection("latA", "latB", "ab2_alpha", "ab2_beta");
}
inline GaloisConnection cc_connection() {
  return fixture_connection("latC", "latC", "cc_alpha", "cc_beta");
}

inline ElemSet labels_to_set(const Lattice& l, const std::vector<std::string>& names) {
  ElemSet out;
  for (const auto& s : names) out.push_back(l.at(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> set_to_labels(const Lattice& l, const ElemSet& s) {
  std::vector<std::string> out;
  for (Elem a : s) out.push_back(l.label(a));
  return out;
}

}  // namespace latgal::testing
