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

#include "support/generators.h"

#include <set>
#include <vector>

#include "support/oracles.h"

namespace sperner::testing {

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t max_edges) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::size_t m = rng.below(max_edges + 1);
  std::set<Mask> edges;
  for (std::size_t i = 0; i < m; ++i) edges.insert(static_cast<Mask>(rng.below(subsets)));
  return from_masks(n, std::vector<Mask>(edges.begin(), edges.end()));
}

Graph random_graph(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.coin()) edges.emplace_back(u, v);
    }
  }
  return Graph::from_indices(letters(n), edges);
}

Hypergraph random_one_sperner_prefixed(Rng& rng, std::size_t n, const std::string& prefix) {
  const Hypergraph h = random_one_sperner(n, rng.next());
  std::vector<VertexId> renamed;
  for (const VertexId& v : h.vertices()) renamed.emplace_back(prefix + v.str());
  return Hypergraph::from_sets(std::move(renamed), h.edges());
}

}  // namespace sperner::testing
