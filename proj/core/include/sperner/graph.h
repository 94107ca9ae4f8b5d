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

#ifndef SPERNER_GRAPH_H_
#define SPERNER_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sperner/hypergraph.h"
#include "sperner/vertex_set.h"

namespace sperner {

// Simple undirected graph. Edges are kept in insertion order as index pairs
// (u < v); adjacency is mirrored as one VertexSet per vertex.
class Graph {
 public:
  Graph() = default;

  // Throws DuplicateVertex, UnknownVertex, InvalidArgument (loop) or
  // DuplicateEdge.
  static Graph make(std::vector<VertexId> vertices,
                    const std::vector<std::pair<VertexId, VertexId>>& edges);
  static Graph from_indices(std::vector<VertexId> vertices,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static Graph of(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  // Labels are "1".."n"; pair (i, j) with i < j is present iff the bit with
  // the lexicographic pair index is set in `code`.
  static Graph from_code(std::size_t n, std::uint64_t code);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  // Open neighbourhood N(v).
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }

  std::optional<std::size_t> index_of(const VertexId& v) const;
  std::vector<VertexId> labels_of(const VertexSet& s) const;

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  Graph(std::vector<VertexId> vertices,
        std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::vector<VertexId> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexSet> adj_;
  std::unordered_map<std::string, std::size_t> index_;
};

Graph complement_graph(const Graph& g);

}  // namespace sperner

#endif  // SPERNER_GRAPH_H_
