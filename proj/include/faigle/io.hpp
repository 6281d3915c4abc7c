// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text formats and DOT export.
//
//   poset 3            lattice 4          geometry           congruence 3
//   cover 0 1          cover 0 1          poset 2            block 0 1
//   cover 1 2          cover 0 2          cover 0 1          block 2
//   label 0 bottom     cover 1 3          flat
//                      cover 2 3          flat 0
//                                         flat 0 1
//
// Blank lines and everything after '#' are ignored. A file may hold several
// blocks back to back.

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "faigle/congruence.hpp"
#include "faigle/geometry.hpp"

namespace faigle::io {

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      Line line{number, {}, raw};
      std::string tok;
      while (ss >> tok) line.tokens.push_back(tok);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
  }

  bool done() const { return pos_ == lines_.size(); }

  /// First token of the next line, if any.
  std::optional<std::string> peek_keyword() const {
    if (done()) return std::nullopt;
    return lines_[pos_].tokens.front();
  }

  Poset read_poset() {
    auto [n, labels, covers] = read_cover_block("poset");
    Poset p = build(covers, [&] { return Poset::from_covers(n, covers); });
    p.set_labels(std::move(labels));
    return p;
  }

  Lattice read_lattice() {
    auto [n, labels, covers] = read_cover_block("lattice");
    Lattice l =
        build(covers, [&] { return Lattice::from_covers(n, covers); });
    l.set_labels(std::move(labels));
    return l;
  }

  /// The geometry is returned unverified; callers decide whether to check it.
  FaigleGeometry read_geometry() {
    expect_header("geometry", 1);
    ++pos_;
    Poset p = read_poset();
    std::vector<ElemSet> flats;
    while (!done() && lines_[pos_].tokens.front() == "flat") {
      const Line& line = lines_[pos_++];
      ElemSet f;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        f.insert(index(line, line.tokens[i], p.size()));
      flats.push_back(f);
    }
    return FaigleGeometry(std::move(p), std::move(flats));
  }

  Congruence read_congruence() {
    const std::size_t n = read_size_header("congruence");
    std::vector<std::size_t> block_of(n, n);
    std::size_t blocks = 0;
    const std::size_t header_line = lines_[pos_ - 1].number;
    while (!done() && lines_[pos_].tokens.front() == "block") {
      const Line& line = lines_[pos_++];
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        Elem x = index(line, line.tokens[i], n);
        if (block_of[x] != n)
          throw ParseError(line.number, "element " + std::to_string(x) +
                                            " appears in two blocks");
        block_of[x] = blocks;
      }
      ++blocks;
    }
    for (Elem x = 0; x < n; ++x)
      if (block_of[x] == n)
        throw ParseError(header_line,
                         "element " + std::to_string(x) + " is in no block");
    return Congruence(std::move(block_of));
  }

  /// Fails on the first line left over after the expected blocks.
  void expect_end() const {
    if (!done())
      throw ParseError(lines_[pos_].number,
                       "unexpected '" + lines_[pos_].tokens.front() + "'");
  }

  /// Set of element indices, for command-line arguments like "0,2,5" or "".
  static ElemSet parse_set(const std::string& text, std::size_t n) {
    ElemSet out;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::replace(s.begin(), s.end(), '{', ' ');
    std::replace(s.begin(), s.end(), '}', ' ');
    std::istringstream ss(s);
    std::string tok;
    Line line{0, {}, text};
    while (ss >> tok) out.insert(index(line, tok, n));
    return out;
  }

 private:
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
    std::string raw;
  };

  struct CoverBlock {
    std::size_t n;
    std::vector<std::string> labels;
    std::vector<ElemPair> covers;
  };

  static std::size_t number(const Line& line, const std::string& tok) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size())
      throw ParseError(line.number, "expected a number, got '" + tok + "'");
    return v;
  }

  static Elem index(const Line& line, const std::string& tok, std::size_t n) {
    std::size_t v = number(line, tok);
    if (v >= n)
      throw ParseError(line.number, "element " + tok + " out of range (size " +
                                        std::to_string(n) + ")");
    return v;
  }

  void expect_header(const std::string& keyword, std::size_t arity) const {
    if (done()) throw ParseError(0, "expected '" + keyword + "', got end of input");
    const Line& line = lines_[pos_];
    if (line.tokens.front() != keyword)
      throw ParseError(line.number, "expected '" + keyword + "', got '" +
                                        line.tokens.front() + "'");
    if (line.tokens.size() != arity)
      throw ParseError(line.number, "malformed '" + keyword + "' line");
  }

  std::size_t read_size_header(const std::string& keyword) {
    expect_header(keyword, 2);
    const Line& line = lines_[pos_++];
    std::size_t n = number(line, line.tokens[1]);
    if (n > kMaxElements)
      throw ParseError(line.number, "size " + std::to_string(n) +
                                        " exceeds capacity " +
                                        std::to_string(kMaxElements));
    return n;
  }

  CoverBlock read_cover_block(const std::string& keyword) {
    CoverBlock b;
    b.n = read_size_header(keyword);
    header_line_ = lines_[pos_ - 1].number;
    cover_lines_.clear();
    std::vector<std::string> labels(b.n);
    bool any_label = false;
    while (!done()) {
      const Line& line = lines_[pos_];
      const std::string& kw = line.tokens.front();
      if (kw == "cover") {
        if (line.tokens.size() != 3)
          throw ParseError(line.number, "malformed 'cover' line");
        b.covers.emplace_back(index(line, line.tokens[1], b.n),
                              index(line, line.tokens[2], b.n));
        cover_lines_.push_back(line.number);
      } else if (kw == "label") {
        if (line.tokens.size() < 3)
          throw ParseError(line.number, "malformed 'label' line");
        Elem x = index(line, line.tokens[1], b.n);
        // The label is the rest of the line, so it may contain spaces.
        std::string_view rest(line.raw);
        rest.remove_prefix(rest.find("label") + 5);
        rest.remove_prefix(rest.find(line.tokens[1]) + line.tokens[1].size());
        auto first = rest.find_first_not_of(" \t");
        auto last = rest.find_last_not_of(" \t\r");
        labels[x] = std::string(rest.substr(first, last - first + 1));
        any_label = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (any_label) b.labels = std::move(labels);
    return b;
  }

  // Self-covers are reported at their own line, other construction errors
  // (cycles, missing bounds) at the block header.
  template <typename Build>
  auto build(const std::vector<ElemPair>& covers, Build f) -> decltype(f()) {
    for (std::size_t i = 0; i < covers.size(); ++i)
      if (covers[i].first == covers[i].second)
        throw ParseError(cover_lines_[i], "cover of an element by itself");
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(header_line_, e.kind() + ": " + e.what());
    }
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t header_line_ = 0;
  std::vector<std::size_t> cover_lines_;
};

inline Poset read_poset(std::istream& in) {
  Reader r(in);
  Poset p = r.read_poset();
  r.expect_end();
  return p;
}

inline Lattice read_lattice(std::istream& in) {
  Reader r(in);
  Lattice l = r.read_lattice();
  r.expect_end();
  return l;
}

inline FaigleGeometry read_geometry(std::istream& in) {
  Reader r(in);
  FaigleGeometry g = r.read_geometry();
  r.expect_end();
  return g;
}

inline std::vector<Lattice> read_lattices(std::istream& in) {
  Reader r(in);
  std::vector<Lattice> out;
  while (!r.done()) out.push_back(r.read_lattice());
  return out;
}

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return read_poset(in);
}
inline Lattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  return read_lattice(in);
}
inline FaigleGeometry parse_geometry(const std::string& text) {
  std::istringstream in(text);
  return read_geometry(in);
}

// ---------------------------------------------------------------------------

namespace detail {

inline void write_cover_block(std::ostream& out, const char* keyword,
                              const Poset& p) {
  out << keyword << ' ' << p.size() << '\n';
  for (auto [x, y] : p.covers()) out << "cover " << x << ' ' << y << '\n';
  const auto& labels = p.labels();
  for (Elem x = 0; x < labels.size(); ++x)
    if (!labels[x].empty()) out << "label " << x << ' ' << labels[x] << '\n';
}

}  // namespace detail

inline void write_poset(std::ostream& out, const Poset& p) {
  detail::write_cover_block(out, "poset", p);
}

inline void write_lattice(std::ostream& out, const Lattice& l) {
  detail::write_cover_block(out, "lattice", l.order());
}

inline void write_geometry(std::ostream& out, const FaigleGeometry& g) {
  out << "geometry\n";
  write_poset(out, g.ground());
  for (const auto& f : g.flats()) {
    out << "flat";
    f.for_each([&](Elem x) { out << ' ' << x; });
    out << '\n';
  }
}

inline void write_congruence(std::ostream& out, const Congruence& c) {
  out << "congruence " << c.size() << '\n';
  for (const auto& block : c.blocks()) {
    out << "block";
    block.for_each([&](Elem x) { out << ' ' << x; });
    out << '\n';
  }
}

template <typename T, typename Writer>
std::string to_text(const T& value, Writer w) {
  std::ostringstream out;
  w(out, value);
  return out.str();
}

// ---------------------------------------------------------------------------

/// Rank of each element: length of the longest chain below it.
inline std::vector<std::size_t> ranks(const Poset& p) {
  std::vector<std::size_t> r(p.size(), 0);
  for (Elem x : p.linear_extension())
    p.lower_covers(x).for_each(
        [&](Elem y) { r[x] = std::max(r[x], r[y] + 1); });
  return r;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Hasse diagram in Graphviz syntax, drawn bottom-up with one rank per level.
inline void write_dot(std::ostream& out, const Poset& p,
                      const std::string& name = "hasse") {
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (Elem x = 0; x < p.size(); ++x)
    out << "  n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  for (auto [x, y] : p.covers())
    out << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  const auto r = ranks(p);
  const std::size_t top = p.size() == 0 ? 0 : *std::max_element(r.begin(), r.end());
  for (std::size_t level = 0; p.size() != 0 && level <= top; ++level) {
    out << "  { rank=same;";
    for (Elem x = 0; x < p.size(); ++x)
      if (r[x] == level) out << " n" << x << ';';
    out << " }\n";
  }
  out << "}\n";
}

inline void write_dot(std::ostream& out, const Lattice& l,
                      const std::string& name = "hasse") {
  write_dot(out, l.order(), name);
}

}  // namespace faigle::io
