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

// Seeded invariant sweeps over random and enumerated instances.

#include <algorithm>

#include <gtest/gtest.h>

#include "sperner/decomposition.h"
#include "sperner/gen.h"
#include "sperner/graphs.h"
#include "sperner/io.h"
#include "sperner/oracle.h"
#include "sperner/weights.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace sperner {
namespace {

TEST(PropertyTest, OneSpernerIsConjunction) {
  Rng rng(1001);
  for (int round = 0; round < 3000; ++round) {
    const Hypergraph h = testing::random_hypergraph(rng, rng.below(7), 6);
    EXPECT_EQ(is_sperner(h), testing::naive_sperner(h));
    EXPECT_EQ(is_dually_sperner(h), testing::naive_dually_sperner(h));
    EXPECT_EQ(is_one_sperner(h), testing::naive_sperner(h) && testing::naive_dually_sperner(h));
  }
}

TEST(PropertyTest, ComplementIsAnInvolution) {
  Rng rng(1002);
  for (int round = 0; round < 1000; ++round) {
    const Hypergraph h = testing::random_hypergraph(rng, rng.below(9), 8);
    EXPECT_EQ(complement(complement(h)), h);
    EXPECT_EQ(from_incidence(h.vertices(), incidence_matrix(h)), h);
    EXPECT_EQ(parse_hg(format_hg(h)), h);
  }
}

TEST(PropertyTest, ComplementOfOneSpernerIsOneSperner) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 16, seed);
    const Hypergraph c = complement(h);
    EXPECT_TRUE(testing::naive_sperner(c) && testing::naive_dually_sperner(c)) << seed;
  }
}

TEST(PropertyTest, UniversalIffIsolatedInComplement) {
  Rng rng(1004);
  for (int round = 0; round < 1000; ++round) {
    const Hypergraph h = testing::random_hypergraph(rng, rng.below(8), 5);
    const VertexClasses a = vertex_classes(h);
    const VertexClasses b = vertex_classes(complement(h));
    EXPECT_EQ(a.universal, b.isolated);
    EXPECT_EQ(a.isolated, b.universal);
  }
}

TEST(PropertyTest, SafeGluingClosure) {
  Rng rng(1005);
  int safe = 0, unsafe = 0;
  while (safe < 1000 || unsafe < 100) {
    const Hypergraph h1 = testing::random_one_sperner_prefixed(rng, rng.below(6), "a");
    const Hypergraph h2 = testing::random_one_sperner_prefixed(rng, rng.below(6), "b");
    const Hypergraph g = glue(h1, h2, VertexId("z"));
    if (is_safe(h1, h2)) {
      EXPECT_TRUE(is_one_sperner(g));
      ++safe;
    } else {
      EXPECT_FALSE(is_sperner(g));
      EXPECT_TRUE(is_dually_sperner(g));
      ++unsafe;
    }
  }
}

TEST(PropertyTest, DecompositionRoundTrip) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 15, seed);
    const Hypergraph back = rebuild(decompose_fully(h));
    EXPECT_EQ(sorted_edge_sizes(back), sorted_edge_sizes(h)) << seed;
    EXPECT_EQ(sorted_vertex_degrees(back), sorted_vertex_degrees(h)) << seed;
    if (h.num_vertices() <= 6) {
      EXPECT_TRUE(testing::brute_permutation_equivalent(
          testing::edge_masks(back), testing::edge_masks(h), h.num_vertices()));
    }
  }
}

TEST(PropertyTest, ComplementKeepsDecompositionVertex) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 12, seed);
    for (const VertexId& z : h.vertices()) {
      if (is_z_decomposable(h, z)) {
        EXPECT_TRUE(is_z_decomposable(complement(h), z));
      }
    }
  }
}

TEST(PropertyTest, MaximumEdgeNesting) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_sperner(n, [](const Hypergraph& h) {
      if (is_one_sperner(h)) {
        EXPECT_FALSE(max_edge_nesting_violation(h).has_value());
      }
    });
  }
}

TEST(PropertyTest, WeightsOnLargerInstances) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 17, seed);
    const WeightAssignment wa = threshold_separator(h);
    EXPECT_TRUE(verify_threshold_separator(h, wa).ok) << seed;
    EXPECT_TRUE(verify_equalizing(h, wa).ok) << seed;
    if (h.num_edges() == 0) {
      EXPECT_GT(wa.threshold, wa.total());
    }
    if (wa.threshold == 0) {
      EXPECT_TRUE(h.num_edges() == 1 && h.edges()[0].empty());
    }
    if (wa.total() == wa.threshold) {
      EXPECT_TRUE(h.num_edges() == 1 && h.edges()[0].size() == h.num_vertices());
    }
  }
}

TEST(PropertyTest, RankAndEdgeBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 20, seed);
    const bool empty_edge_only = h.num_edges() == 1 && h.edges()[0].empty();
    if (!empty_edge_only) {
      EXPECT_EQ(char_rank(h), h.num_edges()) << seed;
    }
    if (h.num_vertices() > 0) {
      EXPECT_LE(h.num_edges(), h.num_vertices()) << seed;
    }
  }
}

TEST(PropertyTest, NormalizedVector) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Hypergraph h = random_one_sperner(seed % 16, seed);
    if (h.num_edges() == 0 || (h.num_edges() == 1 && h.edges()[0].empty())) continue;
    const RationalVector x = normalized_vector(h);
    Rational total = 0;
    for (const Rational& v : x.entries) {
      EXPECT_GE(v, 0);
      total += v;
    }
    EXPECT_GE(total, 1);
    for (const VertexSet& e : h.edges()) {
      Rational row = 0;
      e.for_each([&](std::size_t v) { row += x.entries[v]; });
      EXPECT_EQ(row, 1);
    }
  }
}

TEST(PropertyTest, ConformalCliqueHypergraphs) {
  Rng rng(1010);
  for (int round = 0; round < 1000; ++round) {
    const Graph g = testing::random_graph(rng, rng.below(11));
    const Hypergraph c = clique_hypergraph(g);
    EXPECT_TRUE(is_sperner(c));
    EXPECT_TRUE(is_conformal(c));
  }
}

TEST(PropertyTest, StableSetVariantOnFiveVertices) {
  for (std::uint64_t code = 0; code < 1024; ++code) {
    const Graph g = Graph::from_code(5, code);
    EXPECT_EQ(is_one_sperner(stable_set_hypergraph(g)),
              is_threshold_graph_forbidden(g).threshold)
        << code;
  }
}

}  // namespace
}  // namespace sperner
