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

#include "sperner/weights.h"

#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "sperner/error.h"

namespace sperner {
namespace {

struct Synth {
  std::vector<VertexId> vertices;
  std::vector<BigInt> weights;
  BigInt threshold;
  BigInt total;
};

Synth synthesize(const DecompositionTree& t) {
  if (t.is_leaf()) {
    Synth s;
    s.threshold = t.leaf_kind() == DecompositionTree::Leaf::kNoEdges ? 1 : 0;
    s.total = 0;
    return s;
  }
  Synth left = synthesize(t.left());
  Synth right = synthesize(t.right());
  const BigInt m = right.total + 1;

  Synth out;
  out.vertices.reserve(1 + left.vertices.size() + right.vertices.size());
  out.weights.reserve(out.vertices.capacity());
  out.vertices.push_back(t.z());
  BigInt wz;
  BigInt scale_left = m;
  BigInt scale_right = 1;
  if (left.total >= left.threshold) {
    // E1 non-empty.
    wz = m * (left.total - left.threshold) + right.threshold;
    if (wz == 0) {
      throw Error(ErrorCode::kUnsafeGluing,
                  "node '" + t.z().str() + "' glues E1 = {V1} with E2 = {{}}");
    }
    out.threshold = m * left.total + right.threshold;
  } else {
    // E1 empty: z lies in no edge. Doubling keeps the weight of z at 1 below
    // every gap.
    wz = 1;
    scale_left = 2 * m;
    scale_right = 2;
    out.threshold = scale_left * left.total + 2 * right.threshold;
  }
  out.weights.push_back(wz);
  for (std::size_t i = 0; i < left.vertices.size(); ++i) {
    out.vertices.push_back(std::move(left.vertices[i]));
    out.weights.push_back(scale_left * left.weights[i]);
  }
  for (std::size_t i = 0; i < right.vertices.size(); ++i) {
    out.vertices.push_back(std::move(right.vertices[i]));
    out.weights.push_back(scale_right * right.weights[i]);
  }
  out.total = wz + scale_left * left.total + scale_right * right.total;
  return out;
}

WeightAssignment in_vertex_order(const Hypergraph& h, Synth s) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) pos.emplace(s.vertices[i].str(), i);
  WeightAssignment wa;
  wa.vertices = h.vertices();
  wa.weights.reserve(h.num_vertices());
  for (const VertexId& v : h.vertices()) wa.weights.push_back(std::move(s.weights[pos.at(v.str())]));
  wa.threshold = std::move(s.threshold);
  return wa;
}

std::vector<BigInt> weights_for(const Hypergraph& h, const WeightAssignment& wa) {
  if (wa.vertices.size() != wa.weights.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weight list and vertex list differ in length");
  }
  if (wa.vertices.size() != h.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "weight assignment does not match the vertex set");
  }
  std::vector<BigInt> w(h.num_vertices());
  std::vector<bool> seen(h.num_vertices(), false);
  for (std::size_t i = 0; i < wa.vertices.size(); ++i) {
    auto idx = h.index_of(wa.vertices[i]);
    if (!idx || seen[*idx]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight given for unexpected vertex '" + wa.vertices[i].str() + "'");
    }
    seen[*idx] = true;
    w[*idx] = wa.weights[i];
  }
  return w;
}

void check_cap(const Hypergraph& h, std::size_t cap) {
  const std::size_t limit = std::min<std::size_t>(cap, 30);
  if (h.num_vertices() > limit) {
    throw Error(ErrorCode::kCapExceeded,
                "exhaustive check over " + std::to_string(h.num_vertices()) +
                    " vertices exceeds cap " + std::to_string(limit));
  }
}

SubsetCheck failure(std::size_t n, std::uint64_t mask, std::string reason) {
  return SubsetCheck{false, VertexSet::from_mask(n, mask), std::move(reason)};
}

// Visits all subsets in Gray-code order with a running weight sum. The visitor
// returns false to stop.
template <typename Sum, typename Visit>
void gray_walk(const std::vector<Sum>& w, Visit&& visit) {
  const std::size_t n = w.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  Sum sum = 0;
  std::uint64_t mask = 0;
  if (!visit(mask, sum)) return;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint64_t flip = std::uint64_t{1} << bit;
    if (mask & flip) {
      sum -= w[bit];
    } else {
      sum += w[bit];
    }
    mask ^= flip;
    if (!visit(mask, sum)) return;
  }
}

// Runs f with the weights as int64 when every subset sum fits, else as BigInt.
template <typename F>
SubsetCheck with_sum_type(const std::vector<BigInt>& w, const BigInt& t, F&& f) {
  BigInt total = 0;
  for (const BigInt& x : w) total += abs(x);
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  if (total <= limit && abs(t) <= limit) {
    std::vector<std::int64_t> small;
    small.reserve(w.size());
    for (const BigInt& x : w) small.push_back(x.get_si());
    return f(small, static_cast<std::int64_t>(t.get_si()));
  }
  return f(w, t);
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> out;
  out.reserve(h.num_edges());
  for (const VertexSet& e : h.edges()) out.push_back(*e.to_mask());
  return out;
}

}  // namespace

const BigInt& WeightAssignment::weight_of(const VertexId& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return weights[i];
  }
  throw Error(ErrorCode::kUnknownVertex, "no weight for vertex '" + v.str() + "'");
}

BigInt WeightAssignment::total() const {
  BigInt sum = 0;
  for (const BigInt& w : weights) sum += w;
  return sum;
}

WeightAssignment threshold_separator(const Hypergraph& h) {
  return in_vertex_order(h, synthesize(decompose_fully(h)));
}

WeightAssignment equalizing_weights(const Hypergraph& h) { return threshold_separator(h); }

WeightAssignment weights_from_tree(const DecompositionTree& t) {
  const Hypergraph h = rebuild(t);
  return in_vertex_order(h, synthesize(t));
}

SubsetCheck verify_threshold_separator(const Hypergraph& h, const WeightAssignment& wa,
                                       std::size_t cap) {
  check_cap(h, cap);
  const std::size_t n = h.num_vertices();
  const std::vector<BigInt> w = weights_for(h, wa);
  const BigInt& t = wa.threshold;

  for (std::size_t v = 0; v < n; ++v) {
    if (w[v] <= 0) {
      return failure(n, std::uint64_t{1} << v,
                     "weight of '" + h.vertices()[v].str() + "' is not positive");
    }
  }
  if (t < 0) return SubsetCheck{false, std::nullopt, "threshold is negative"};
  BigInt total = 0;
  for (const BigInt& x : w) total += x;
  const bool single_full_edge = h.num_edges() == 1 && h.edges()[0] == h.full_set();
  if (total == t && !single_full_edge) {
    return failure(n, (std::uint64_t{1} << n) - 1,
                   "w(V) = t but E is not {V}");
  }
  const bool only_empty_edge = h.num_edges() == 1 && h.edges()[0].empty();
  if (t == 0 && !only_empty_edge) {
    return SubsetCheck{false, std::nullopt, "t = 0 but E is not {{}}"};
  }

  // dependent[X] = X contains an edge, by closing edge masks upward.
  std::vector<std::uint8_t> dependent(std::size_t{1} << n, 0);
  for (std::uint64_t e : edge_masks(h)) dependent[e] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < dependent.size(); ++x) {
      if ((x & bit) && dependent[x ^ bit]) dependent[x] = 1;
    }
  }

  return with_sum_type(w, t, [&](const auto& weights, const auto& thr) {
    SubsetCheck result;
    gray_walk(weights, [&](std::uint64_t mask, const auto& sum) {
      const bool reaches = sum >= thr;
      if (reaches == static_cast<bool>(dependent[mask])) return true;
      result = failure(n, mask,
                       reaches ? "independent set reaches the threshold"
                               : "dependent set stays below the threshold");
      return false;
    });
    return result;
  });
}

SubsetCheck verify_equalizing(const Hypergraph& h, const WeightAssignment& wa,
                              std::size_t cap) {
  check_cap(h, cap);
  const std::size_t n = h.num_vertices();
  const std::vector<BigInt> w = weights_for(h, wa);
  const BigInt& t = wa.threshold;

  const std::vector<std::uint64_t> masks = edge_masks(h);
  for (std::uint64_t e : masks) {
    BigInt sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (e >> v & 1) sum += w[v];
    }
    if (sum != t) return failure(n, e, "edge weight differs from the threshold");
  }
  const std::unordered_set<std::uint64_t> edges(masks.begin(), masks.end());
  return with_sum_type(w, t, [&](const auto& weights, const auto& thr) {
    SubsetCheck result;
    gray_walk(weights, [&](std::uint64_t mask, const auto& sum) {
      if (sum != thr || edges.contains(mask)) return true;
      result = failure(n, mask, "non-edge sums to the threshold");
      return false;
    });
    return result;
  });
}

RationalVector normalized_vector(const Hypergraph& h) {
  if (!is_one_sperner(h)) throw Error(ErrorCode::kNotOneSperner, "hypergraph is not 1-Sperner");
  if (h.num_edges() == 0 || (h.num_edges() == 1 && h.edges()[0].empty())) {
    throw Error(ErrorCode::kDegenerateEdgeSet, "edge set is {} or {{}}");
  }
  const WeightAssignment wa = equalizing_weights(h);
  RationalVector x;
  x.vertices = wa.vertices;
  x.entries.reserve(wa.weights.size());
  for (const BigInt& w : wa.weights) {
    Rational q(w, wa.threshold);
    q.canonicalize();
    x.entries.push_back(std::move(q));
  }
  return x;
}

std::size_t char_rank(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(h.num_edges());
  for (const VertexSet& e : h.edges()) {
    std::vector<Rational> row(n, 0);
    e.for_each([&](std::size_t v) { row[v] = 1; });
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace sperner
