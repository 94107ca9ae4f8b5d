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

#include "sperner/graph.h"

#include "sperner/error.h"

namespace sperner {

Graph::Graph(std::vector<VertexId> vertices,
             std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(vertices_[i].str(), i).second) {
      throw Error(ErrorCode::kDuplicateVertex,
                  "vertex '" + vertices_[i].str() + "' listed twice");
    }
  }
  adj_.assign(n, VertexSet(n));
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument, "loop at vertex '" + vertices_[u].str() + "'");
    }
    if (u > v) std::swap(u, v);
    if (adj_[u].contains(v)) {
      throw Error(ErrorCode::kDuplicateEdge, "edge " + vertices_[u].str() + "-" +
                                                 vertices_[v].str() + " listed twice");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

Graph Graph::make(std::vector<VertexId> vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].str(), i);
  auto lookup = [&](const VertexId& v) {
    auto it = index.find(v.str());
    if (it == index.end()) {
      throw Error(ErrorCode::kUnknownVertex, "edge mentions unknown vertex '" + v.str() + "'");
    }
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [u, v] : edges) pairs.emplace_back(lookup(u), lookup(v));
  return Graph(std::move(vertices), std::move(pairs));
}

Graph Graph::from_indices(std::vector<VertexId> vertices,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  return Graph(std::move(vertices), edges);
}

Graph Graph::of(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<VertexId> vs;
  for (auto& v : vertices) vs.emplace_back(std::move(v));
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [u, v] : edges) es.emplace_back(VertexId(u), VertexId(v));
  return make(std::move(vs), es);
}

Graph Graph::from_code(std::size_t n, std::uint64_t code) {
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(std::to_string(i + 1));
  std::vector<std::pair<std::size_t, std::size_t>> es;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1u) es.emplace_back(i, j);
    }
  }
  return Graph(std::move(vs), std::move(es));
}

std::optional<std::size_t> Graph::index_of(const VertexId& v) const {
  auto it = index_.find(v.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Graph::labels_of(const VertexSet& s) const {
  std::vector<VertexId> out;
  s.for_each([&](std::size_t i) { out.push_back(vertices_[i]); });
  return out;
}

Graph complement_graph(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v) {
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph::from_indices(g.vertices(), es);
}

}  // namespace sperner
