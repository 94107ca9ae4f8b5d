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

#ifndef SPERNER_DECOMPOSITION_H_
#define SPERNER_DECOMPOSITION_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/hypergraph.h"

namespace sperner {

// Binary tree of gluings. Leaves are the two vertex-free hypergraphs; every
// internal node glues its left subtree (first factor) and right subtree
// (second factor) at a fresh vertex z. Immutable; subtrees are shared.
class DecompositionTree {
 public:
  enum class Leaf {
    kNoEdges,    // ({}, {})
    kEmptyEdge,  // ({}, {{}})
  };

  static DecompositionTree leaf(Leaf kind);
  static DecompositionTree node(VertexId z, DecompositionTree left, DecompositionTree right);

  bool is_leaf() const { return node_ == nullptr; }
  Leaf leaf_kind() const { return leaf_; }
  // Internal nodes only.
  const VertexId& z() const;
  const DecompositionTree& left() const;
  const DecompositionTree& right() const;

  std::size_t internal_nodes() const;
  std::size_t depth() const;

  bool operator==(const DecompositionTree& other) const;

 private:
  struct Node;
  DecompositionTree() = default;

  Leaf leaf_ = Leaf::kNoEdges;
  std::shared_ptr<const Node> node_;
};

struct DecompositionTree::Node {
  VertexId z;
  DecompositionTree left;
  DecompositionTree right;
};

// H1 ⊙ H2 at z. Vertex order (z, V1, V2); edge order ({z} ∪ e for e in E1,
// then V1 ∪ e for e in E2), so the incidence matrix has the block form
//   [ 1  A1  0  ]
//   [ 0  1   A2 ].
// Throws VertexCollision when the factors share a vertex or contain z.
Hypergraph glue(const Hypergraph& h1, const Hypergraph& h2, const VertexId& z);

// A gluing of 1-Sperner factors is 1-Sperner unless E1 = {V1} and E2 = {{}}.
bool is_safe(const Hypergraph& h1, const Hypergraph& h2);

// For all edges e, f with z ∈ e \ f: e \ {z} ⊆ f. Throws UnknownVertex.
bool is_z_decomposable(const Hypergraph& h, const VertexId& z);

struct Split {
  Hypergraph first;   // (V1, E1)
  Hypergraph second;  // (V2, E2)
};

// Inverse of glue at z: V1 is the union of the z-edges minus z, V2 the
// remaining vertices other than z (both in H's vertex order). Throws
// NotDecomposable.
Split split_at(const Hypergraph& h, const VertexId& z);

// A vertex at which a 1-Sperner hypergraph splits, chosen deterministically:
// isolated, then universal vertices; otherwise the minimum-k(v) vertex when the
// k values differ; otherwise the vertex the uniform core of the largest edges
// points at. Falls back to a full scan if a policy pick is not eligible.
// Throws NotOneSperner or EmptyVertexSet.
VertexId find_decomposition_vertex(const Hypergraph& h);

// Recursive split down to vertex-free leaves. Throws NotOneSperner.
DecompositionTree decompose_fully(const Hypergraph& h);

// Bottom-up gluing. Throws VertexCollision on repeated labels and
// UnsafeGluing (naming the node) when a node has E1 = {V1} and E2 = {{}}.
Hypergraph rebuild(const DecompositionTree& t);

// Per-node safety, preorder, for reporting.
struct NodeSafety {
  VertexId z;
  bool safe;
};
std::vector<NodeSafety> node_safety(const DecompositionTree& t);

// "(z LEFT RIGHT)" with leaves "[0]" for ({}, {}) and "[e]" for ({}, {{}}).
std::string to_text(const DecompositionTree& t);
DecompositionTree parse_tree(std::string_view text);

struct UniformCore {
  enum class Kind {
    kCommonCore,  // |P| = r-1 and P ⊆ e for every edge
    kCoveringSet, // |Q| = r+1 and e ⊆ Q for every edge
  };
  Kind kind;
  VertexSet set;
};

// Structure of an r-uniform 1-Sperner hypergraph (r >= 1). With one edge the
// core is its first r-1 vertices. Throws NotUniform or NotOneSperner.
UniformCore uniform_core(const Hypergraph& h);

// For a maximum-size edge C, distinct x, y outside C, edges A ∋ x and B ∋ y
// with |A| <= |B|, a 1-Sperner hypergraph has A ∩ C ⊆ B ∩ C. Returns the
// first (C, A, B) edge-index triple breaking this, scanning every maximum
// edge.
struct NestingViolation {
  std::size_t max_edge;
  std::size_t a;
  std::size_t b;
};
std::optional<NestingViolation> max_edge_nesting_violation(const Hypergraph& h);

}  // namespace sperner

#endif  // SPERNER_DECOMPOSITION_H_
