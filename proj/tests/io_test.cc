// Copyright 2026 The Sperner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "sperner/error.h"
#include "sperner/gen.h"
#include "sperner/io.h"

namespace sperner {
namespace {

std::size_t LineOf(std::string_view text, bool graph = false) {
  try {
    if (graph) {
      parse_gr(text);
    } else {
      parse_hg(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return 0;
}

TEST(HgFormatTest, ParsesH2) {
  const Hypergraph h = parse_hg("HG 1\nV v1 v2\nE v1\nE v2\n");
  EXPECT_EQ(h, Hypergraph::of({"v1", "v2"}, {{"v1"}, {"v2"}}));
}

TEST(HgFormatTest, BareRecords) {
  EXPECT_EQ(parse_hg("HG 1\nV\n"), Hypergraph::empty());
  EXPECT_EQ(parse_hg("HG 1\nV\nE\n"), Hypergraph::empty_edge_only());
  EXPECT_EQ(parse_hg("HG 1\nV a\nE\n"), Hypergraph::of({"a"}, {{}}));
}

TEST(HgFormatTest, CommentsAndBlankLines) {
  const Hypergraph h = parse_hg("# header\n\nHG 1   # version\nV a b\n\n# edges\nE a b # pair\n");
  EXPECT_EQ(h, Hypergraph::of({"a", "b"}, {{"a", "b"}}));
}

TEST(HgFormatTest, FormatRoundTrip) {
  for (const Hypergraph& h : {Hypergraph::empty(), Hypergraph::empty_edge_only(),
                              extremal_family(3), random_one_sperner(9, 3)}) {
    EXPECT_EQ(parse_hg(format_hg(h)), h);
  }
  EXPECT_EQ(format_hg(Hypergraph::of({"a", "b"}, {{"a"}, {}})), "HG 1\nV a b\nE a\nE\n");
}

TEST(HgFormatTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(LineOf("HG 2\nV a\n"), 1u);
  EXPECT_EQ(LineOf(""), 1u);
  EXPECT_EQ(LineOf("HG 1\nE a\n"), 2u);
  EXPECT_EQ(LineOf("HG 1\nV a\nE a\nE b\n"), 4u);
  EXPECT_EQ(LineOf("HG 1\nV a a\n"), 2u);
  EXPECT_EQ(LineOf("HG 1\nV a\nE a\n\nE a\n"), 5u);
  EXPECT_EQ(LineOf("HG 1\nV a b\nE a a\n"), 3u);
  EXPECT_EQ(LineOf("HG 1\nV a\nX a\n"), 3u);
  EXPECT_EQ(LineOf("HG 1\nV a\nE a\nHG 1\nV\n"), 4u);
}

TEST(HgFormatTest, StreamOfDocuments) {
  const auto docs = parse_hg_stream("HG 1\nV a\nE a\nHG 1\nV\nE\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1], Hypergraph::empty_edge_only());
}

TEST(GrFormatTest, ParseAndRoundTrip) {
  const Graph g = parse_gr("GR 1\nV a b c\nE a b\nE c b\n");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(parse_gr(format_gr(g)), g);
}

TEST(GrFormatTest, Errors) {
  EXPECT_EQ(LineOf("GR 1\nV a b\nE a\n", true), 3u);
  EXPECT_EQ(LineOf("GR 1\nV a b\nE a a\n", true), 3u);
  EXPECT_EQ(LineOf("GR 1\nV a b\nE a b\nE b a\n", true), 4u);
  EXPECT_EQ(LineOf("GR 1\nV a b\nE a z\n", true), 3u);
  EXPECT_EQ(LineOf("HG 1\nV a\n", true), 1u);
}

}  // namespace
}  // namespace sperner
