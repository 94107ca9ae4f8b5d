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

#include "sperner/decomposition.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "sperner/error.h"

namespace sperner {

DecompositionTree DecompositionTree::leaf(Leaf kind) {
  DecompositionTree t;
  t.leaf_ = kind;
  return t;
}

DecompositionTree DecompositionTree::node(VertexId z, DecompositionTree left,
                                          DecompositionTree right) {
  DecompositionTree t;
  t.node_ = std::make_shared<const Node>(Node{std::move(z), std::move(left), std::move(right)});
  return t;
}

const VertexId& DecompositionTree::z() const {
  if (is_leaf()) throw Error(ErrorCode::kInvalidArgument, "leaf has no gluing vertex");
  return node_->z;
}

const DecompositionTree& DecompositionTree::left() const {
  if (is_leaf()) throw Error(ErrorCode::kInvalidArgument, "leaf has no children");
  return node_->left;
}

const DecompositionTree& DecompositionTree::right() const {
  if (is_leaf()) throw Error(ErrorCode::kInvalidArgument, "leaf has no children");
  return node_->right;
}

std::size_t DecompositionTree::internal_nodes() const {
  if (is_leaf()) return 0;
  return 1 + node_->left.internal_nodes() + node_->right.internal_nodes();
}

std::size_t DecompositionTree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(node_->left.depth(), node_->right.depth());
}

bool DecompositionTree::operator==(const DecompositionTree& other) const {
  if (is_leaf() || other.is_leaf()) {
    return is_leaf() && other.is_leaf() && leaf_ == other.leaf_;
  }
  return node_->z == other.node_->z && node_->left == other.node_->left &&
         node_->right == other.node_->right;
}

Hypergraph glue(const Hypergraph& h1, const Hypergraph& h2, const VertexId& z) {
  if (h1.has_vertex(z) || h2.has_vertex(z)) {
    throw Error(ErrorCode::kVertexCollision, "gluing vertex '" + z.str() + "' already used");
  }
  for (const VertexId& v : h2.vertices()) {
    if (h1.has_vertex(v)) {
      throw Error(ErrorCode::kVertexCollision, "vertex '" + v.str() + "' is in both factors");
    }
  }
  const std::size_t n1 = h1.num_vertices();
  const std::size_t n2 = h2.num_vertices();
  const std::size_t n = 1 + n1 + n2;

  std::vector<VertexId> vertices;
  vertices.reserve(n);
  vertices.push_back(z);
  vertices.insert(vertices.end(), h1.vertices().begin(), h1.vertices().end());
  vertices.insert(vertices.end(), h2.vertices().begin(), h2.vertices().end());

  std::vector<std::size_t> map1(n1), map2(n2);
  for (std::size_t i = 0; i < n1; ++i) map1[i] = 1 + i;
  for (std::size_t i = 0; i < n2; ++i) map2[i] = 1 + n1 + i;

  VertexSet v1_block(n);
  for (std::size_t i = 0; i < n1; ++i) v1_block.insert(1 + i);

  std::vector<VertexSet> edges;
  edges.reserve(h1.num_edges() + h2.num_edges());
  for (const VertexSet& e : h1.edges()) {
    VertexSet g = e.remap(n, map1);
    g.insert(0);
    edges.push_back(std::move(g));
  }
  for (const VertexSet& e : h2.edges()) edges.push_back(e.remap(n, map2) | v1_block);
  return Hypergraph::from_sets(std::move(vertices), std::move(edges));
}

bool is_safe(const Hypergraph& h1, const Hypergraph& h2) {
  const bool e1_is_v1 = h1.num_edges() == 1 && h1.edges()[0] == h1.full_set();
  const bool e2_is_empty_edge = h2.num_edges() == 1 && h2.edges()[0].empty();
  return !(e1_is_v1 && e2_is_empty_edge);
}

namespace {

bool decomposable_at(const Hypergraph& h, std::size_t z) {
  for (const VertexSet& e : h.edges()) {
    if (!e.contains(z)) continue;
    VertexSet rest = e;
    rest.erase(z);
    for (const VertexSet& f : h.edges()) {
      if (!f.contains(z) && !rest.is_subset_of(f)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> k_values(const Hypergraph& h) {
  std::vector<std::size_t> k(h.num_vertices(), 0);
  for (const VertexSet& e : h.edges()) {
    const std::size_t size = e.size();
    e.for_each([&](std::size_t v) { k[v] = std::max(k[v], size); });
  }
  return k;
}

std::optional<std::size_t> policy_vertex(const Hypergraph& h) {
  const VertexClasses classes = vertex_classes(h);
  if (auto v = classes.isolated.first()) return v;
  if (auto v = classes.universal.first()) return v;

  const std::vector<std::size_t> k = k_values(h);
  const auto [lo, hi] = std::minmax_element(k.begin(), k.end());
  if (*lo != *hi) {
    const std::size_t v = static_cast<std::size_t>(lo - k.begin());
    for (const VertexSet& f : h.edges()) {
      if (!f.contains(v) && f.size() < k[v]) return std::nullopt;
    }
    return v;
  }

  const std::size_t top = *hi;
  if (top <= 1) return 0;
  std::vector<VertexSet> largest;
  for (const VertexSet& e : h.edges()) {
    if (e.size() == top) largest.push_back(e);
  }
  const Hypergraph top_layer = Hypergraph::from_sets(h.vertices(), largest);
  const UniformCore core = uniform_core(top_layer);
  if (core.kind == UniformCore::Kind::kCommonCore) {
    if (largest.size() == h.num_edges()) return 0;
    VertexSet covered = h.empty_set();
    for (const VertexSet& e : largest) covered |= e;
    return (covered - core.set).first();
  }
  VertexSet common = h.full_set();
  for (const VertexSet& e : largest) common &= e;
  return (h.full_set() - common).first();
}

std::size_t decomposition_vertex_index(const Hypergraph& h) {
  if (auto v = policy_vertex(h); v && decomposable_at(h, *v)) return *v;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (decomposable_at(h, v)) return v;
  }
  throw std::logic_error("1-Sperner hypergraph without a decomposition vertex");
}

Split split_at_index(const Hypergraph& h, std::size_t z) {
  const std::size_t n = h.num_vertices();
  VertexSet v1 = h.empty_set();
  for (const VertexSet& e : h.edges()) {
    if (e.contains(z)) v1 |= e;
  }
  v1.erase(z);
  VertexSet v2 = h.full_set() - v1;
  v2.erase(z);

  std::vector<std::size_t> map1(n, 0), map2(n, 0);
  std::vector<VertexId> labels1, labels2;
  v1.for_each([&](std::size_t i) {
    map1[i] = labels1.size();
    labels1.push_back(h.vertices()[i]);
  });
  v2.for_each([&](std::size_t i) {
    map2[i] = labels2.size();
    labels2.push_back(h.vertices()[i]);
  });

  std::vector<VertexSet> e1, e2;
  for (const VertexSet& e : h.edges()) {
    if (e.contains(z)) {
      VertexSet rest = e;
      rest.erase(z);
      e1.push_back(rest.remap(labels1.size(), map1));
    } else {
      if (!v1.is_subset_of(e)) {
        throw Error(ErrorCode::kNotDecomposable,
                    "an edge avoiding '" + h.vertices()[z].str() + "' misses part of V1");
      }
      e2.push_back((e - v1).remap(labels2.size(), map2));
    }
  }
  return Split{Hypergraph::from_sets(std::move(labels1), std::move(e1)),
               Hypergraph::from_sets(std::move(labels2), std::move(e2))};
}

void require_one_sperner(const Hypergraph& h) {
  if (auto bad = one_sperner_violation(h)) {
    throw Error(ErrorCode::kNotOneSperner,
                "edges #" + std::to_string(bad->first + 1) + " and #" +
                    std::to_string(bad->second + 1) + " violate the 1-Sperner condition");
  }
}

DecompositionTree decompose_unchecked(const Hypergraph& h) {
  if (h.num_vertices() == 0) {
    return DecompositionTree::leaf(h.num_edges() == 0 ? DecompositionTree::Leaf::kNoEdges
                                                      : DecompositionTree::Leaf::kEmptyEdge);
  }
  const std::size_t z = decomposition_vertex_index(h);
  Split parts = split_at_index(h, z);
  return DecompositionTree::node(h.vertices()[z], decompose_unchecked(parts.first),
                                 decompose_unchecked(parts.second));
}

Hypergraph rebuild_impl(const DecompositionTree& t, std::vector<NodeSafety>* report) {
  if (t.is_leaf()) {
    return t.leaf_kind() == DecompositionTree::Leaf::kNoEdges ? Hypergraph::empty()
                                                              : Hypergraph::empty_edge_only();
  }
  std::size_t slot = 0;
  if (report != nullptr) {
    slot = report->size();
    report->push_back(NodeSafety{t.z(), true});
  }
  const Hypergraph h1 = rebuild_impl(t.left(), report);
  const Hypergraph h2 = rebuild_impl(t.right(), report);
  if (!is_safe(h1, h2)) {
    if (report == nullptr) {
      throw Error(ErrorCode::kUnsafeGluing, "node '" + t.z().str() +
                                                "' glues E1 = {V1} with E2 = {{}}");
    }
    (*report)[slot].safe = false;
  }
  return glue(h1, h2, t.z());
}

}  // namespace

bool is_z_decomposable(const Hypergraph& h, const VertexId& z) {
  return decomposable_at(h, h.require_index(z));
}

Split split_at(const Hypergraph& h, const VertexId& z) {
  const std::size_t idx = h.require_index(z);
  if (!decomposable_at(h, idx)) {
    throw Error(ErrorCode::kNotDecomposable,
                "hypergraph is not decomposable at '" + z.str() + "'");
  }
  return split_at_index(h, idx);
}

VertexId find_decomposition_vertex(const Hypergraph& h) {
  require_one_sperner(h);
  if (h.num_vertices() == 0) {
    throw Error(ErrorCode::kEmptyVertexSet, "a vertex-free hypergraph has no gluing vertex");
  }
  return h.vertices()[decomposition_vertex_index(h)];
}

DecompositionTree decompose_fully(const Hypergraph& h) {
  require_one_sperner(h);
  return decompose_unchecked(h);
}

Hypergraph rebuild(const DecompositionTree& t) { return rebuild_impl(t, nullptr); }

std::vector<NodeSafety> node_safety(const DecompositionTree& t) {
  std::vector<NodeSafety> report;
  rebuild_impl(t, &report);
  return report;
}

std::string to_text(const DecompositionTree& t) {
  if (t.is_leaf()) return t.leaf_kind() == DecompositionTree::Leaf::kNoEdges ? "[0]" : "[e]";
  return "(" + t.z().str() + " " + to_text(t.left()) + " " + to_text(t.right()) + ")";
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  DecompositionTree parse() {
    DecompositionTree t = tree();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "tree text at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  DecompositionTree tree() {
    skip_space();
    if (text_.substr(pos_, 3) == "[0]") {
      pos_ += 3;
      return DecompositionTree::leaf(DecompositionTree::Leaf::kNoEdges);
    }
    if (text_.substr(pos_, 3) == "[e]") {
      pos_ += 3;
      return DecompositionTree::leaf(DecompositionTree::Leaf::kEmptyEdge);
    }
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' or a leaf");
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '[') {
      ++pos_;
    }
    const std::string label(text_.substr(start, pos_ - start));
    if (!VertexId::is_valid(label)) fail("invalid node label");
    DecompositionTree left = tree();
    DecompositionTree right = tree();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return DecompositionTree::node(VertexId(label), std::move(left), std::move(right));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DecompositionTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

UniformCore uniform_core(const Hypergraph& h) {
  if (h.num_edges() == 0) throw Error(ErrorCode::kNotUniform, "no edges, uniformity undefined");
  const std::size_t r = h.edges()[0].size();
  if (r == 0) throw Error(ErrorCode::kNotUniform, "edge size must be at least 1");
  for (const VertexSet& e : h.edges()) {
    if (e.size() != r) throw Error(ErrorCode::kNotUniform, "edges of different sizes");
  }
  require_one_sperner(h);

  const VertexSet& e = h.edges()[0];
  if (h.num_edges() == 1) {
    VertexSet p = h.empty_set();
    std::size_t taken = 0;
    e.for_each([&](std::size_t v) {
      if (taken + 1 < r) {
        p.insert(v);
        ++taken;
      }
    });
    return UniformCore{UniformCore::Kind::kCommonCore, std::move(p)};
  }
  const VertexSet& f = h.edges()[1];
  VertexSet p = e & f;
  for (const VertexSet& g : h.edges()) {
    if (!p.is_subset_of(g)) return UniformCore{UniformCore::Kind::kCoveringSet, e | f};
  }
  return UniformCore{UniformCore::Kind::kCommonCore, std::move(p)};
}

std::optional<NestingViolation> max_edge_nesting_violation(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::size_t top = 0;
  for (const VertexSet& e : edges) top = std::max(top, e.size());
  for (std::size_t c = 0; c < edges.size(); ++c) {
    if (edges[c].size() != top) continue;
    const VertexSet& big = edges[c];
    for (std::size_t a = 0; a < edges.size(); ++a) {
      const VertexSet outside_a = edges[a] - big;
      if (outside_a.empty()) continue;
      for (std::size_t b = 0; b < edges.size(); ++b) {
        if (edges[a].size() > edges[b].size()) continue;
        const VertexSet outside_b = edges[b] - big;
        if (outside_b.empty()) continue;
        // Need distinct x in A \ C and y in B \ C.
        if (outside_a.size() == 1 && outside_a == outside_b) continue;
        if (!(edges[a] & big).is_subset_of(edges[b] & big)) {
          return NestingViolation{c, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace sperner
