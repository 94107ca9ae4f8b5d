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

#ifndef SPERNER_HYPERGRAPH_H_
#define SPERNER_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sperner/vertex_set.h"

namespace sperner {

// A vertex label: a non-empty token without whitespace. The characters
// '#', '(', ')', '[' and ']' are reserved by the text formats.
class VertexId {
 public:
  explicit VertexId(std::string label);

  static bool is_valid(std::string_view label);

  const std::string& str() const { return label_; }

  auto operator<=>(const VertexId&) const = default;

 private:
  std::string label_;
};

std::vector<VertexId> make_labels(std::initializer_list<std::string_view> labels);

// Finite hypergraph (V, E). The vertex list order is the incidence-matrix
// column order and the edge list order is the row order. Edges are distinct
// subsets of V; both E = {} and E = {{}} are allowed, with or without
// vertices.
class Hypergraph {
 public:
  // The vertex-free hypergraph (V, E) = ({}, {}).
  Hypergraph() = default;

  // Validating constructor. Throws UnknownVertex, DuplicateVertex,
  // DuplicateEdge (duplicates are never merged) or InvalidLabel.
  static Hypergraph make(std::vector<VertexId> vertices,
                         const std::vector<std::vector<VertexId>>& edges);
  // Same, with edges already expressed over the vertex indices.
  static Hypergraph from_sets(std::vector<VertexId> vertices,
                              std::vector<VertexSet> edges);
  // Convenience for tests and examples: labels given as plain strings.
  static Hypergraph of(std::vector<std::string> vertices,
                       const std::vector<std::vector<std::string>>& edges);

  static Hypergraph empty();             // ({}, {})
  static Hypergraph empty_edge_only();   // ({}, {{}})

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::size_t> index_of(const VertexId& v) const;
  // Throws UnknownVertex.
  std::size_t require_index(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return index_of(v).has_value(); }

  VertexSet full_set() const { return VertexSet::full(vertices_.size()); }
  VertexSet empty_set() const { return VertexSet(vertices_.size()); }
  VertexSet set_of(std::span<const VertexId> labels) const;
  std::vector<VertexId> labels_of(const VertexSet& s) const;

  bool contains_edge(const VertexSet& s) const;

  // Exact equality: same vertex order and same edge order.
  bool operator==(const Hypergraph& other) const;

 private:
  Hypergraph(std::vector<VertexId> vertices, std::vector<VertexSet> edges);

  std::vector<VertexId> vertices_;
  std::vector<VertexSet> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Equality as set systems over labels: vertex and edge order ignored.
bool same_hypergraph(const Hypergraph& a, const Hypergraph& b);

bool is_sperner(const Hypergraph& h);
bool is_dually_sperner(const Hypergraph& h);
bool is_one_sperner(const Hypergraph& h);

// First pair of edge indices (i < j) violating the 1-Sperner condition.
std::optional<std::pair<std::size_t, std::size_t>> one_sperner_violation(
    const Hypergraph& h);

// Same vertex list, edges replaced by their complements in edge order.
Hypergraph complement(const Hypergraph& h);

class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  bool operator==(const IncidenceMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);
// Inverse of incidence_matrix for a given vertex list.
Hypergraph from_incidence(std::vector<VertexId> vertices, const IncidenceMatrix& a);

inline constexpr std::size_t kDefaultPermutationCap = 16;

// True iff `a` can be turned into `b` by permuting rows and columns. Refuses
// (CapExceeded) when either dimension of either matrix exceeds `cap`.
bool permutation_equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b,
                            std::size_t cap = kDefaultPermutationCap);

struct VertexClasses {
  VertexSet universal;
  VertexSet isolated;
  // Unordered pairs (i < j) of distinct vertices with identical membership.
  std::vector<std::pair<std::size_t, std::size_t>> twin_pairs;
};

VertexClasses vertex_classes(const Hypergraph& h);

// Whether every pairwise-covered vertex set lies in some edge. Requires a
// Sperner hypergraph (throws NotSperner).
bool is_conformal(const Hypergraph& h);

// Largest size of an edge containing v; nullopt when v is in no edge.
std::optional<std::size_t> k_of(const Hypergraph& h, const VertexId& v);

// Multisets used for order-free comparisons of large instances.
std::vector<std::size_t> sorted_edge_sizes(const Hypergraph& h);
std::vector<std::size_t> sorted_vertex_degrees(const Hypergraph& h);

}  // namespace sperner

#endif  // SPERNER_HYPERGRAPH_H_
