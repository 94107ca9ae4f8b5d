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

#include "sperner/hypergraph.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

#include "sperner/error.h"
#include "sperner/graph.h"
#include "sperner/graphs.h"

namespace sperner {

VertexId::VertexId(std::string label) : label_(std::move(label)) {
  if (!is_valid(label_)) {
    throw Error(ErrorCode::kInvalidLabel, "invalid vertex label '" + label_ + "'");
  }
}

bool VertexId::is_valid(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) return false;
    if (c == '#' || c == '(' || c == ')' || c == '[' || c == ']') return false;
    if (static_cast<unsigned char>(c) < 0x20) return false;
  }
  return true;
}

std::vector<VertexId> make_labels(std::initializer_list<std::string_view> labels) {
  std::vector<VertexId> out;
  out.reserve(labels.size());
  for (std::string_view l : labels) out.emplace_back(std::string(l));
  return out;
}

Hypergraph::Hypergraph(std::vector<VertexId> vertices, std::vector<VertexSet> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].str(), i).second) {
      throw Error(ErrorCode::kDuplicateVertex,
                  "vertex '" + vertices_[i].str() + "' listed twice");
    }
  }
  std::unordered_set<VertexSet, VertexSetHash> seen;
  seen.reserve(edges_.size());
  for (const VertexSet& e : edges_) {
    if (e.universe() != vertices_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "edge universe does not match vertex count");
    }
    if (!seen.insert(e).second) {
      std::string text = "{";
      bool first = true;
      e.for_each([&](std::size_t i) {
        text += (first ? "" : ",") + vertices_[i].str();
        first = false;
      });
      throw Error(ErrorCode::kDuplicateEdge, "edge " + text + "} listed twice");
    }
  }
}

Hypergraph Hypergraph::make(std::vector<VertexId> vertices,
                            const std::vector<std::vector<VertexId>>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].str(), i);
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& edge : edges) {
    VertexSet s(vertices.size());
    for (const VertexId& v : edge) {
      auto it = index.find(v.str());
      if (it == index.end()) {
        throw Error(ErrorCode::kUnknownVertex,
                    "edge mentions unknown vertex '" + v.str() + "'");
      }
      s.insert(it->second);
    }
    sets.push_back(std::move(s));
  }
  return Hypergraph(std::move(vertices), std::move(sets));
}

Hypergraph Hypergraph::from_sets(std::vector<VertexId> vertices,
                                 std::vector<VertexSet> edges) {
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph Hypergraph::of(std::vector<std::string> vertices,
                          const std::vector<std::vector<std::string>>& edges) {
  std::vector<VertexId> vs;
  vs.reserve(vertices.size());
  for (auto& v : vertices) vs.emplace_back(std::move(v));
  std::vector<std::vector<VertexId>> es;
  es.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<VertexId> row;
    for (const auto& v : e) row.emplace_back(v);
    es.push_back(std::move(row));
  }
  return make(std::move(vs), es);
}

Hypergraph Hypergraph::empty() { return Hypergraph(); }

Hypergraph Hypergraph::empty_edge_only() {
  return Hypergraph({}, std::vector<VertexSet>{VertexSet(0)});
}

std::optional<std::size_t> Hypergraph::index_of(const VertexId& v) const {
  auto it = index_.find(v.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::require_index(const VertexId& v) const {
  auto idx = index_of(v);
  if (!idx) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v.str() + "'");
  return *idx;
}

VertexSet Hypergraph::set_of(std::span<const VertexId> labels) const {
  VertexSet s(vertices_.size());
  for (const VertexId& v : labels) s.insert(require_index(v));
  return s;
}

std::vector<VertexId> Hypergraph::labels_of(const VertexSet& s) const {
  std::vector<VertexId> out;
  s.for_each([&](std::size_t i) { out.push_back(vertices_[i]); });
  return out;
}

bool Hypergraph::contains_edge(const VertexSet& s) const {
  return std::find(edges_.begin(), edges_.end(), s) != edges_.end();
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  return vertices_ == other.vertices_ && edges_ == other.edges_;
}

namespace {

using LabelSet = std::set<std::string>;

std::set<LabelSet> label_edges(const Hypergraph& h) {
  std::set<LabelSet> out;
  for (const VertexSet& e : h.edges()) {
    LabelSet s;
    e.for_each([&](std::size_t i) { s.insert(h.vertices()[i].str()); });
    out.insert(std::move(s));
  }
  return out;
}

// Applies `pred(|e\f|, |f\e|)` to every unordered pair of distinct edges and
// returns the first failing pair.
template <typename Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_bad_pair(const Hypergraph& h,
                                                                   Pred pred) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const std::size_t a = edges[i].difference_size(edges[j]);
      const std::size_t b = edges[j].difference_size(edges[i]);
      if (!pred(std::min(a, b))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace

bool same_hypergraph(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  LabelSet va, vb;
  for (const auto& v : a.vertices()) va.insert(v.str());
  for (const auto& v : b.vertices()) vb.insert(v.str());
  return va == vb && label_edges(a) == label_edges(b);
}

bool is_sperner(const Hypergraph& h) {
  return !first_bad_pair(h, [](std::size_t m) { return m >= 1; });
}

bool is_dually_sperner(const Hypergraph& h) {
  return !first_bad_pair(h, [](std::size_t m) { return m <= 1; });
}

bool is_one_sperner(const Hypergraph& h) { return !one_sperner_violation(h); }

std::optional<std::pair<std::size_t, std::size_t>> one_sperner_violation(
    const Hypergraph& h) {
  return first_bad_pair(h, [](std::size_t m) { return m == 1; });
}

Hypergraph complement(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (const VertexSet& e : h.edges()) edges.push_back(e.complement());
  return Hypergraph::from_sets(h.vertices(), std::move(edges));
}

IncidenceMatrix::IncidenceMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix a(h.num_edges(), h.num_vertices());
  for (std::size_t r = 0; r < h.num_edges(); ++r) {
    h.edges()[r].for_each([&](std::size_t c) { a.set(r, c, true); });
  }
  return a;
}

Hypergraph from_incidence(std::vector<VertexId> vertices, const IncidenceMatrix& a) {
  if (a.cols() != vertices.size()) {
    throw Error(ErrorCode::kInvalidArgument, "column count does not match vertex count");
  }
  std::vector<VertexSet> edges;
  edges.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    VertexSet e(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c)) e.insert(c);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_sets(std::move(vertices), std::move(edges));
}

namespace {

// Column-to-column matching search. Columns of `a` are assigned in order;
// after each assignment the multiset of partial rows must agree.
class PermutationMatcher {
 public:
  PermutationMatcher(const IncidenceMatrix& a, const IncidenceMatrix& b)
      : a_(a), b_(b), used_(b.cols(), false), sig_a_(a.rows(), 0), sig_b_(b.rows(), 0) {
    col_key_a_ = column_keys(a);
    col_key_b_ = column_keys(b);
  }

  bool run() { return extend(0); }

 private:
  static std::vector<std::vector<std::size_t>> column_keys(const IncidenceMatrix& m) {
    std::vector<std::size_t> row_sum(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) row_sum[r] += m.at(r, c) ? 1 : 0;
    }
    std::vector<std::vector<std::size_t>> keys(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.at(r, c)) keys[c].push_back(row_sum[r]);
      }
      std::sort(keys[c].begin(), keys[c].end());
    }
    return keys;
  }

  bool rows_agree() const {
    std::vector<std::uint64_t> x = sig_a_, y = sig_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  bool extend(std::size_t depth) {
    if (depth == a_.cols()) return true;
    const std::uint64_t bit = std::uint64_t{1} << depth;
    for (std::size_t j = 0; j < b_.cols(); ++j) {
      if (used_[j] || col_key_a_[depth] != col_key_b_[j]) continue;
      used_[j] = true;
      for (std::size_t r = 0; r < a_.rows(); ++r) {
        if (a_.at(r, depth)) sig_a_[r] |= bit;
        if (b_.at(r, j)) sig_b_[r] |= bit;
      }
      if (rows_agree() && extend(depth + 1)) return true;
      for (std::size_t r = 0; r < a_.rows(); ++r) {
        sig_a_[r] &= ~bit;
        sig_b_[r] &= ~bit;
      }
      used_[j] = false;
    }
    return false;
  }

  const IncidenceMatrix& a_;
  const IncidenceMatrix& b_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> sig_a_;
  std::vector<std::uint64_t> sig_b_;
  std::vector<std::vector<std::size_t>> col_key_a_;
  std::vector<std::vector<std::size_t>> col_key_b_;
};

}  // namespace

bool permutation_equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b,
                            std::size_t cap) {
  const std::size_t limit = std::min<std::size_t>(cap, 64);
  if (a.rows() > limit || a.cols() > limit || b.rows() > limit || b.cols() > limit) {
    throw Error(ErrorCode::kCapExceeded,
                "permutation equivalence is limited to " + std::to_string(limit) + "x" +
                    std::to_string(limit) + " matrices");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;

  auto sums = [](const IncidenceMatrix& m, bool by_row) {
    std::vector<std::size_t> s(by_row ? m.rows() : m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c)) ++s[by_row ? r : c];
      }
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sums(a, true) != sums(b, true) || sums(a, false) != sums(b, false)) return false;
  return PermutationMatcher(a, b).run();
}

VertexClasses vertex_classes(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  std::vector<VertexSet> membership(n, VertexSet(m));
  for (std::size_t r = 0; r < m; ++r) {
    h.edges()[r].for_each([&](std::size_t v) { membership[v].insert(r); });
  }
  VertexClasses out{h.empty_set(), h.empty_set(), {}};
  for (std::size_t v = 0; v < n; ++v) {
    if (membership[v].size() == m) out.universal.insert(v);
    if (membership[v].empty()) out.isolated.insert(v);
  }
  std::map<VertexSet, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[membership[v]].push_back(v);
  for (const auto& [sig, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out.twin_pairs.emplace_back(members[i], members[j]);
      }
    }
  }
  std::sort(out.twin_pairs.begin(), out.twin_pairs.end());
  return out;
}

bool is_conformal(const Hypergraph& h) {
  if (!is_sperner(h)) {
    throw Error(ErrorCode::kNotSperner, "conformality is defined for Sperner hypergraphs");
  }
  // Co-occurrence graph: u ~ v iff some edge holds both.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = h.num_vertices();
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (const VertexSet& e : h.edges()) {
    const auto members = e.elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        adj[members[i]].insert(members[j]);
        adj[members[j]].insert(members[i]);
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].for_each([&](std::size_t v) {
      if (u < v) pairs.emplace_back(u, v);
    });
  }
  const Graph g = Graph::from_indices(h.vertices(), pairs);
  std::vector<VertexSet> cliques = maximal_cliques(g);
  std::vector<VertexSet> edges = h.edges();
  std::sort(cliques.begin(), cliques.end());
  std::sort(edges.begin(), edges.end());
  return cliques == edges;
}

std::optional<std::size_t> k_of(const Hypergraph& h, const VertexId& v) {
  const std::size_t idx = h.require_index(v);
  std::optional<std::size_t> best;
  for (const VertexSet& e : h.edges()) {
    if (e.contains(idx)) best = std::max(best.value_or(0), e.size());
  }
  return best;
}

std::vector<std::size_t> sorted_edge_sizes(const Hypergraph& h) {
  std::vector<std::size_t> out;
  for (const VertexSet& e : h.edges()) out.push_back(e.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sorted_vertex_degrees(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.num_vertices(), 0);
  for (const VertexSet& e : h.edges()) e.for_each([&](std::size_t v) { ++deg[v]; });
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace sperner
