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

#ifndef SPERNER_GRAPHS_H_
#define SPERNER_GRAPHS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sperner/graph.h"
#include "sperner/hypergraph.h"
#include "sperner/oracle.h"

namespace sperner {

// All inclusion-maximal cliques, each once, sorted lexicographically by their
// member index lists. The vertex-free graph has the single clique {}.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// C(G): vertex set V(G), one edge per maximal clique.
Hypergraph clique_hypergraph(const Graph& g);
// S(G): one edge per maximal stable set, i.e. C of the complement graph.
Hypergraph stable_set_hypergraph(const Graph& g);

enum class ForbiddenKind { kP4, kC4, k2K2 };
std::string_view to_string(ForbiddenKind kind);

struct ForbiddenSubgraph {
  ForbiddenKind kind;
  std::array<std::size_t, 4> vertices;  // ascending indices
};

struct ForbiddenCheck {
  bool threshold;
  std::optional<ForbiddenSubgraph> witness;
};

// Scans all 4-vertex subsets for an induced P4, C4 or 2K2.
ForbiddenCheck is_threshold_graph_forbidden(const Graph& g);

struct SplitOrdering {
  VertexSet clique;
  VertexSet independent;
  // Members of `independent` with N(order[i]) ⊆ N(order[j]) for i < j.
  std::vector<std::size_t> order;
};

struct OrderingCheck {
  bool threshold;
  std::optional<SplitOrdering> witness;
};

inline constexpr std::size_t kDefaultOrderingCap = 20;

// Searches split partitions V = K ∪ I (clique + independent set) whose
// independent side is a chain under neighbourhood inclusion. Exhaustive
// backtracking; refuses beyond `cap` vertices.
OrderingCheck is_threshold_graph_ordering(const Graph& g,
                                          std::size_t cap = kDefaultOrderingCap);

// The four equivalent statements about a graph G:
//   threshold_graph     G has no induced P4, C4, 2K2
//   clique_one_sperner  C(G) is 1-Sperner
//   clique_threshold    C(G) is a threshold hypergraph (exact LP oracle)
//   clique_2_asummable  C(G) is 2-asummable (brute-force oracle)
struct EquivalenceReport {
  bool threshold_graph;
  bool clique_one_sperner;
  bool clique_threshold;
  bool clique_2_asummable;
  std::optional<ForbiddenSubgraph> forbidden;
  std::optional<AsummabilityWitness> summability;

  bool all_agree() const {
    return threshold_graph == clique_one_sperner && threshold_graph == clique_threshold &&
           threshold_graph == clique_2_asummable;
  }
};

// Throws CapExceeded when the graph is too large for the oracle clauses.
EquivalenceReport threshold_equivalence_report(const Graph& g,
                                               const OracleCaps& caps = {});

}  // namespace sperner

#endif  // SPERNER_GRAPHS_H_
