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

#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

namespace faigle {
namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    io::parse_lattice(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Io, LatticeRoundTrip) {
  Lattice l = test::hexagon();
  std::string text = io::to_text(l, [](std::ostream& o, const Lattice& x) {
    io::write_lattice(o, x);
  });
  Lattice back = io::parse_lattice(text);
  EXPECT_EQ(back.order(), l.order());
  EXPECT_EQ(back.labels(), l.labels());
}

TEST(Io, CommentsBlankLinesAndLabelsWithSpaces) {
  Poset p = io::parse_poset(
      "# a chain\n\nposet 2   # header\ncover 0 1\nlabel 1 the top\n");
  EXPECT_EQ(p, Poset::chain(2));
  EXPECT_EQ(p.label(1), "the top");
  EXPECT_EQ(p.label(0), "0");
}

TEST(Io, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("lattice 3\ncover 0 1\n\ncover 0 x\n"), 4u);
  EXPECT_EQ(parse_error_line("lattice 3\ncover 0 3\n"), 2u);
  EXPECT_EQ(parse_error_line("lattice 2\ncover 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("# c\nlattice 3\ncover 0 1\ncover 0 2\n"), 2u);
  EXPECT_EQ(parse_error_line("poset 2\n"), 1u);
  EXPECT_EQ(parse_error_line("lattice 2\ncover 0 1\nbogus\n"), 3u);
  EXPECT_EQ(parse_error_line("lattice 2\ncover 0\n"), 2u);
}

TEST(Io, Geometry) {
  FaigleGeometry g = geom_of_lattice(test::chain(3));
  std::ostringstream out;
  io::write_geometry(out, g);
  EXPECT_EQ(out.str(), "geometry\nposet 2\ncover 0 1\nflat\nflat 0\nflat 0 1\n");
  FaigleGeometry back = io::parse_geometry(out.str());
  EXPECT_EQ(back.flats(), g.flats());
  EXPECT_EQ(back.ground(), g.ground());
  EXPECT_FALSE(back.verified());
}

TEST(Io, Congruence) {
  std::ostringstream out;
  io::write_congruence(out, Congruence({0, 1, 0}));
  EXPECT_EQ(out.str(), "congruence 3\nblock 0 2\nblock 1\n");
  std::istringstream in(out.str());
  io::Reader r(in);
  EXPECT_EQ(r.read_congruence(), Congruence({0, 1, 0}));
  std::istringstream bad("congruence 3\nblock 0 1\nblock 1 2\n");
  io::Reader rb(bad);
  EXPECT_THROW(rb.read_congruence(), ParseError);
}

TEST(Io, SeveralBlocks) {
  std::istringstream in("lattice 1\nlattice 2\ncover 0 1\n");
  auto ls = io::read_lattices(in);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[1].size(), 2u);
}

TEST(Io, ParseSet) {
  EXPECT_EQ(io::Reader::parse_set("0,2", 3), (ElemSet{0, 2}));
  EXPECT_EQ(io::Reader::parse_set("{1}", 3), ElemSet{1});
  EXPECT_TRUE(io::Reader::parse_set("", 3).empty());
  EXPECT_THROW(io::Reader::parse_set("5", 3), ParseError);
}

TEST(Io, DotOfSquare) {
  std::ostringstream out;
  io::write_dot(out, test::b2());
  const std::string dot = out.str();
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos;
         pos = dot.find(needle, pos + 1))
      ++c;
    return c;
  };
  EXPECT_EQ(count("[label="), 4u);
  EXPECT_EQ(count(" -> "), 4u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("{ rank=same; n0; }"), std::string::npos);
  EXPECT_NE(dot.find("{ rank=same; n1; n2; }"), std::string::npos);
}

}  // namespace
}  // namespace faigle
