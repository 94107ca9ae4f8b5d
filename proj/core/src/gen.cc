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

#include "sperner/gen.h"

#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>

#include "sperner/error.h"

namespace sperner {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r <= limit) return r % bound;
  }
}

namespace {

struct StarParts {
  VertexSet x;
  std::vector<std::size_t> y;
};

StarParts star_parts(const std::vector<VertexId>& v, const std::vector<VertexId>& x,
                     const std::vector<VertexId>& y) {
  std::unordered_set<std::string> seen;
  for (const VertexId& a : v) {
    if (!seen.insert(a.str()).second) {
      throw Error(ErrorCode::kInvalidGenerator, "vertex '" + a.str() + "' listed twice in V");
    }
  }
  const Hypergraph base = Hypergraph::from_sets(v, {});
  if (y.empty()) throw Error(ErrorCode::kInvalidGenerator, "Y must be non-empty");
  StarParts parts{base.empty_set(), {}};
  auto locate = [&](const VertexId& a) {
    auto idx = base.index_of(a);
    if (!idx) throw Error(ErrorCode::kInvalidGenerator, "'" + a.str() + "' is not in V");
    return *idx;
  };
  for (const VertexId& a : x) {
    const std::size_t i = locate(a);
    if (parts.x.contains(i)) throw Error(ErrorCode::kInvalidGenerator, "X repeats '" + a.str() + "'");
    parts.x.insert(i);
  }
  VertexSet ys = base.empty_set();
  for (const VertexId& a : y) {
    const std::size_t i = locate(a);
    if (parts.x.contains(i)) {
      throw Error(ErrorCode::kInvalidGenerator, "X and Y share '" + a.str() + "'");
    }
    if (ys.contains(i)) throw Error(ErrorCode::kInvalidGenerator, "Y repeats '" + a.str() + "'");
    ys.insert(i);
    parts.y.push_back(i);
  }
  return parts;
}

}  // namespace

Hypergraph star(const std::vector<VertexId>& v, const std::vector<VertexId>& x,
                const std::vector<VertexId>& y) {
  StarParts parts = star_parts(v, x, y);
  std::vector<VertexSet> edges;
  for (std::size_t i : parts.y) {
    VertexSet e = parts.x;
    e.insert(i);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_sets(v, std::move(edges));
}

Hypergraph antistar(const std::vector<VertexId>& v, const std::vector<VertexId>& x,
                    const std::vector<VertexId>& y) {
  StarParts parts = star_parts(v, x, y);
  VertexSet all = parts.x;
  for (std::size_t i : parts.y) all.insert(i);
  std::vector<VertexSet> edges;
  for (std::size_t i : parts.y) {
    VertexSet e = all;
    e.erase(i);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_sets(v, std::move(edges));
}

namespace {

class Labeler {
 public:
  VertexId fresh() { return VertexId("v" + std::to_string(++count_)); }

 private:
  std::size_t count_ = 0;
};

Hypergraph extremal(std::size_t k, Labeler& labels) {
  if (k == 2) {
    std::vector<VertexId> v{labels.fresh(), labels.fresh()};
    return Hypergraph::from_sets(std::move(v), {VertexSet::of(2, {0}), VertexSet::of(2, {1})});
  }
  const Hypergraph prev = extremal(k - 1, labels);
  std::vector<VertexId> padded = prev.vertices();
  padded.push_back(labels.fresh());
  std::vector<VertexSet> edges;
  std::vector<std::size_t> same(prev.num_vertices());
  for (std::size_t i = 0; i < same.size(); ++i) same[i] = i;
  for (const VertexSet& e : prev.edges()) edges.push_back(e.remap(padded.size(), same));
  const Hypergraph first = Hypergraph::from_sets(std::move(padded), std::move(edges));
  const Hypergraph second = extremal(k - 1, labels);
  const VertexId z = labels.fresh();
  return glue(first, second, z);
}

struct Built {
  DecompositionTree tree;
  Hypergraph graph;
};

Built leaf_factor(Rng& rng) {
  const bool no_edges = rng.coin();
  return no_edges ? Built{DecompositionTree::leaf(DecompositionTree::Leaf::kNoEdges),
                          Hypergraph::empty()}
                  : Built{DecompositionTree::leaf(DecompositionTree::Leaf::kEmptyEdge),
                          Hypergraph::empty_edge_only()};
}

}  // namespace

Hypergraph extremal_family(std::size_t k, std::size_t cap) {
  if (k < 2) throw Error(ErrorCode::kInvalidGenerator, "extremal family needs k >= 2");
  if (k > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "extremal family k = " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  Labeler labels;
  return extremal(k, labels);
}

DecompositionTree random_one_sperner_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  if (n == 0) return leaf_factor(rng).tree;

  std::vector<Built> pool;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t remaining = n - step + 1;
    const VertexId z("v" + std::to_string(step));
    for (;;) {
      // Pool entries still to be merged must fit into the remaining steps.
      const bool must_merge = pool.size() >= 2 && pool.size() - 1 == remaining;
      const bool may_start = pool.size() + 1 <= remaining;
      std::size_t taken_a = pool.size(), taken_b = pool.size();
      std::optional<Built> a, b;
      if (must_merge || (pool.size() >= 2 && !rng.coin())) {
        taken_a = rng.below(pool.size());
        taken_b = rng.below(pool.size() - 1);
        if (taken_b >= taken_a) ++taken_b;
        a = pool[taken_a];
        b = pool[taken_b];
      } else if (!pool.empty() && (!may_start || rng.coin())) {
        taken_a = rng.below(pool.size());
        a = pool[taken_a];
        b = leaf_factor(rng);
        if (rng.coin()) std::swap(a, b);
      } else {
        a = leaf_factor(rng);
        b = leaf_factor(rng);
      }
      if (!is_safe(a->graph, b->graph)) continue;
      Built node{DecompositionTree::node(z, a->tree, b->tree), glue(a->graph, b->graph, z)};
      // Remove consumed entries, larger index first.
      if (taken_b < pool.size() && taken_a < pool.size()) {
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::max(taken_a, taken_b)));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(taken_a, taken_b)));
      } else if (taken_a < pool.size()) {
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(taken_a));
      }
      pool.push_back(std::move(node));
      break;
    }
  }
  return pool.front().tree;
}

Hypergraph random_one_sperner(std::size_t n, std::uint64_t seed) {
  return rebuild(random_one_sperner_tree(n, seed));
}

}  // namespace sperner
