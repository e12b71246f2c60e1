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

// Text formats for lattices and maps, and DOT output.
//
//   lattice <name>
//   elements <l0> <l1> ... <lk>
//   bottom <l0>
//   top <lk>
//   covers
//   <la> < <lb>
//
//   map <name> from <file#lattice> to <file#lattice>
//   <src> -> <dst>
//
// Tokens are whitespace separated; `#` at the start of a token begins a
// comment (the `file#lattice` references are single tokens and unaffected).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "latgal/error.hpp"
#include "latgal/lattice.hpp"

namespace latgal {

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits each line into tokens, dropping comments.
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size() || line[i] == '#') break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void parse_error(const std::string& source, std::size_t line,
                                     std::size_t column, const std::string& what) {
  throw Error(ErrorKind::kParseError, source + ":" + std::to_string(line) +
                                          ":" + std::to_string(column) + ": " +
                                          what);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline Lattice parse_lattice(std::string_view text,
                             const std::string& source = "<input>") {
  const auto lines = detail::tokenize(text);
  std::optional<std::string> name, bottom, top;
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> cover_list;
  bool in_covers = false;
  std::size_t last_line = 0;

  auto expect_args = [&](const std::vector<detail::Token>& t, std::size_t n) {
    if (t.size() != n + 1) {
      detail::parse_error(source, t[0].line, t[0].column,
                          "'" + t[0].text + "' takes " + std::to_string(n) +
                              " argument" + (n == 1 ? "" : "s"));
    }
  };
  auto once = [&](bool seen, const detail::Token& t) {
    if (seen) detail::parse_error(source, t.line, t.column, "duplicate '" + t.text + "'");
  };

  for (const auto& t : lines) {
    last_line = t[0].line;
    const std::string& kw = t[0].text;
    if (in_covers) {
      if (t.size() == 3 && t[1].text == "<") {
        cover_list.emplace_back(t[0].text, t[2].text);
        continue;
      }
      detail::parse_error(source, t[0].line, t[0].column,
                          "expected '<lower> < <upper>'");
    }
    if (kw == "lattice") {
      once(name.has_value(), t[0]);
      expect_args(t, 1);
      name = t[1].text;
    } else if (kw == "elements") {
      once(elements.has_value(), t[0]);
      if (t.size() < 2) {
        detail::parse_error(source, t[0].line, t[0].column, "no elements listed");
      }
      elements.emplace();
      for (std::size_t i = 1; i < t.size(); ++i) elements->push_back(t[i].text);
    } else if (kw == "bottom") {
      once(bottom.has_value(), t[0]);
      expect_args(t, 1);
      bottom = t[1].text;
    } else if (kw == "top") {
      once(top.has_value(), t[0]);
      expect_args(t, 1);
      top = t[1].text;
    } else if (kw == "covers") {
      expect_args(t, 0);
      in_covers = true;
    } else {
      detail::parse_error(source, t[0].line, t[0].column,
                          "unknown directive '" + kw + "'");
    }
  }
  const std::size_t eof = last_line + 1;
  if (!name) detail::parse_error(source, eof, 1, "missing 'lattice <name>'");
  if (!elements) detail::parse_error(source, eof, 1, "missing 'elements'");
  if (!bottom) detail::parse_error(source, eof, 1, "missing 'bottom'");
  if (!top) detail::parse_error(source, eof, 1, "missing 'top'");
  if (!in_covers || cover_list.empty()) {
    detail::parse_error(source, eof, 1, "missing 'covers' section");
  }
  return build_from_covers(*name, *elements, *bottom, *top, cover_list);
}

inline Lattice read_lattice_file(const std::filesystem::path& path) {
  return parse_lattice(detail::read_file(path), path.string());
}

inline std::string print_lattice(const Lattice& l) {
  std::ostringstream out;
  out << "lattice " << l.name() << "\n";
  out << "elements";
  for (const auto& s : l.labels()) out << ' ' << s;
  out << "\nbottom " << l.label(l.bottom()) << "\ntop " << l.label(l.top())
      << "\ncovers\n";
  for (auto [a, b] : covers(l)) {
    out << l.label(a) << " < " << l.label(b) << "\n";
  }
  return out.str();
}

// A parsed but unresolved map file.
struct MapSpec {
  std::string name;
  std::string from_file;
  std::string from_lattice;
  std::string to_file;
  std::string to_lattice;
  struct Entry {
    std::string src, dst;
    std::size_t line, column;
  };
  std::vector<Entry> entries;
  std::string source;
};

namespace detail {

inline std::pair<std::string, std::string> split_ref(const Token& t,
                                                     const std::string& source) {
  const auto hash = t.text.find('#');
  if (hash == std::string::npos || hash == 0 || hash + 1 == t.text.size()) {
    parse_error(source, t.line, t.column, "expected <file>#<lattice>, got '" + t.text + "'");
  }
  return {t.text.substr(0, hash), t.text.substr(hash + 1)};
}

}  // namespace detail

inline MapSpec parse_map(std::string_view text, const std::string& source = "<input>") {
  MapSpec spec;
  spec.source = source;
  const auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_error(source, 1, 1, "empty map file");
  const auto& h = lines.front();
  if (h.size() != 6 || h[0].text != "map" || h[2].text != "from" || h[4].text != "to") {
    detail::parse_error(source, h[0].line, h[0].column,
                        "expected 'map <name> from <file#lattice> to <file#lattice>'");
  }
  spec.name = h[1].text;
  std::tie(spec.from_file, spec.from_lattice) = detail::split_ref(h[3], source);
  std::tie(spec.to_file, spec.to_lattice) = detail::split_ref(h[5], source);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.size() != 3 || t[1].text != "->") {
      detail::parse_error(source, t[0].line, t[0].column, "expected '<src> -> <dst>'");
    }
    spec.entries.push_back({t[0].text, t[2].text, t[0].line, t[0].column});
  }
  return spec;
}

inline MapSpec read_map_file(const std::filesystem::path& path) {
  return parse_map(detail::read_file(path), path.string());
}

// Resolves labels against the given lattices. Every source element must be
// mapped exactly once.
inline MonotoneMap resolve_map(const MapSpec& spec, const LatticePtr& src,
                               const LatticePtr& dst) {
  if (spec.from_lattice != src->name() || spec.to_lattice != dst->name()) {
    throw Error(ErrorKind::kInvalidArgument,
                spec.source + ": map '" + spec.name + "' runs from " +
                    spec.from_lattice + " to " + spec.to_lattice +
                    ", not from " + src->name() + " to " + dst->name());
  }
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> table(src->size(), kUnset);
  for (const auto& e : spec.entries) {
    auto where = [&] {
      return spec.source + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": ";
    };
    auto a = src->find(e.src);
    if (!a) throw Error(ErrorKind::kUnknownLabel, where() + "'" + e.src + "' is not in " + src->name());
    auto b = dst->find(e.dst);
    if (!b) throw Error(ErrorKind::kUnknownLabel, where() + "'" + e.dst + "' is not in " + dst->name());
    if (table[*a] != kUnset) {
      throw Error(ErrorKind::kParseError, where() + "'" + e.src + "' mapped twice");
    }
    table[*a] = *b;
  }
  for (Elem a = 0; a < table.size(); ++a) {
    if (table[a] == kUnset) {
      throw Error(ErrorKind::kParseError,
                  spec.source + ": '" + src->label(a) + "' has no image", {a});
    }
  }
  return {src, dst, std::move(table)};
}

inline std::string print_map(const MonotoneMap& m, const std::string& name,
                             const std::string& from_file,
                             const std::string& to_file) {
  std::ostringstream out;
  out << "map " << name << " from " << from_file << '#' << m.src->name() << " to "
      << to_file << '#' << m.dst->name() << "\n";
  for (Elem a = 0; a < m.table.size(); ++a) {
    out << m.src->label(a) << " -> " << m.dst->label(m.table[a]) << "\n";
  }
  return out.str();
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Hasse diagram, bottom drawn lowest. Highlighted nodes are filled.
inline std::string emit_dot(const Lattice& l, const ElemSet& highlight = {}) {
  std::ostringstream out;
  out << "digraph " << dot_quote(l.name()) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem a = 0; a < l.size(); ++a) {
    out << "  n" << a << " [label=" << dot_quote(l.label(a));
    if (std::binary_search(highlight.begin(), highlight.end(), a)) {
      out << ", style=filled, fillcolor=lightblue";
    }
    out << "];\n";
  }
  out << "  { rank=min; n" << l.bottom() << "; }\n";
  out << "  { rank=max; n" << l.top() << "; }\n";
  for (auto [a, b] : covers(l)) {
    out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace latgal
