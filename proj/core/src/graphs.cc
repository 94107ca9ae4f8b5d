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

#include "sperner/graphs.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "sperner/error.h"

namespace sperner {
namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have = false;
  (p | x).for_each([&](std::size_t u) {
    const std::size_t score = (p & g.neighbors(u)).size();
    if (!have || score > best) {
      pivot = u;
      best = score;
      have = true;
    }
  });
  const VertexSet candidates = p - g.neighbors(pivot);
  candidates.for_each([&](std::size_t v) {
    r.insert(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> out;
  VertexSet r(n);
  bron_kerbosch(g, r, VertexSet::full(n), VertexSet(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph clique_hypergraph(const Graph& g) {
  return Hypergraph::from_sets(g.vertices(), maximal_cliques(g));
}

Hypergraph stable_set_hypergraph(const Graph& g) {
  return clique_hypergraph(complement_graph(g));
}

std::string_view to_string(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::kP4:
      return "P4";
    case ForbiddenKind::kC4:
      return "C4";
    case ForbiddenKind::k2K2:
      return "2K2";
  }
  return "?";
}

ForbiddenCheck is_threshold_graph_forbidden(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::size_t, 4> q{a, b, c, d};
          std::array<int, 4> degree{};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++degree[i];
                ++degree[j];
              }
            }
          }
          const bool all_two = std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; });
          const bool all_one = std::all_of(degree.begin(), degree.end(), [](int x) { return x == 1; });
          const bool path = edges == 3 && std::count(degree.begin(), degree.end(), 1) == 2 &&
                            std::count(degree.begin(), degree.end(), 2) == 2;
          if (path) return {false, ForbiddenSubgraph{ForbiddenKind::kP4, q}};
          if (edges == 4 && all_two) return {false, ForbiddenSubgraph{ForbiddenKind::kC4, q}};
          if (edges == 2 && all_one) return {false, ForbiddenSubgraph{ForbiddenKind::k2K2, q}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

class SplitSearch {
 public:
  explicit SplitSearch(const Graph& g)
      : g_(g), clique_(g.num_vertices()), independent_(g.num_vertices()) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.neighbors(a).size() > g.neighbors(b).size();
    });
  }

  std::optional<SplitOrdering> run() {
    if (search(0)) return found_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t i) {
    if (i == order_.size()) return accept();
    const std::size_t v = order_[i];
    const VertexSet& nv = g_.neighbors(v);
    if (!nv.intersects(independent_)) {
      independent_.insert(v);
      if (search(i + 1)) return true;
      independent_.erase(v);
    }
    if (clique_.is_subset_of(nv)) {
      clique_.insert(v);
      if (search(i + 1)) return true;
      clique_.erase(v);
    }
    return false;
  }

  bool accept() {
    std::vector<std::size_t> chain = independent_.elements();
    std::stable_sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
      return g_.neighbors(a).size() < g_.neighbors(b).size();
    });
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!g_.neighbors(chain[i - 1]).is_subset_of(g_.neighbors(chain[i]))) return false;
    }
    found_ = SplitOrdering{clique_, independent_, std::move(chain)};
    return true;
  }

  const Graph& g_;
  VertexSet clique_;
  VertexSet independent_;
  std::vector<std::size_t> order_;
  SplitOrdering found_;
};

}  // namespace

OrderingCheck is_threshold_graph_ordering(const Graph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw Error(ErrorCode::kCapExceeded, "split ordering search: " +
                                             std::to_string(g.num_vertices()) +
                                             " vertices exceeds cap " + std::to_string(cap));
  }
  auto witness = SplitSearch(g).run();
  const bool ok = witness.has_value();
  return {ok, std::move(witness)};
}

EquivalenceReport threshold_equivalence_report(const Graph& g, const OracleCaps& caps) {
  const Hypergraph cliques = clique_hypergraph(g);
  const ForbiddenCheck forbidden = is_threshold_graph_forbidden(g);
  const ThresholdResult lp = is_threshold(cliques, caps);
  AsummabilityResult summable = is_k_asummable(cliques, 2, caps);

  EquivalenceReport report;
  report.threshold_graph = forbidden.threshold;
  report.clique_one_sperner = is_one_sperner(cliques);
  report.clique_threshold = lp.threshold();
  report.clique_2_asummable = summable.asummable;
  report.forbidden = forbidden.witness;
  report.summability = std::move(summable.witness);
  return report;
}

}  // namespace sperner
