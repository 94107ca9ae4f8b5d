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

#ifndef SPERNER_WEIGHTS_H_
#define SPERNER_WEIGHTS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sperner/decomposition.h"
#include "sperner/hypergraph.h"
#include "sperner/numeric.h"

namespace sperner {

// Positive integer weights per vertex plus a non-negative threshold.
struct WeightAssignment {
  std::vector<VertexId> vertices;
  std::vector<BigInt> weights;
  BigInt threshold;

  // Throws UnknownVertex.
  const BigInt& weight_of(const VertexId& v) const;
  BigInt total() const;
};

// Nice threshold separator built over decompose_fully(h). Throws NotOneSperner.
WeightAssignment threshold_separator(const Hypergraph& h);
// Same recursion, same (w, t); certifies w(X) = t iff X is an edge.
WeightAssignment equalizing_weights(const Hypergraph& h);
// Weights for rebuild(t), vertices in rebuild order. Throws UnsafeGluing or
// VertexCollision.
WeightAssignment weights_from_tree(const DecompositionTree& t);

inline constexpr std::size_t kDefaultVerifyCap = 24;

struct SubsetCheck {
  bool ok = true;
  std::optional<VertexSet> counterexample;  // offending subset, if any
  std::string reason;                       // empty when ok
};

// Exhaustive over all 2^n subsets: w(X) >= t iff X contains an edge; plus
// w > 0, t >= 0, w(V) = t => E = {V}, t = 0 => E = {{}}. Throws CapExceeded
// when n > cap, InvalidArgument when wa does not cover the vertices of h.
SubsetCheck verify_threshold_separator(const Hypergraph& h, const WeightAssignment& wa,
                                       std::size_t cap = kDefaultVerifyCap);
// Exhaustive: w(X) = t iff X is an edge.
SubsetCheck verify_equalizing(const Hypergraph& h, const WeightAssignment& wa,
                              std::size_t cap = kDefaultVerifyCap);

struct RationalVector {
  std::vector<VertexId> vertices;
  std::vector<Rational> entries;
};

// x_v = w(v) / t from the equalizing weights, so that every edge sums to 1.
// Throws DegenerateEdgeSet for E = {} or E = {{}}, NotOneSperner.
RationalVector normalized_vector(const Hypergraph& h);

// Rank of the incidence matrix over the rationals.
std::size_t char_rank(const Hypergraph& h);

}  // namespace sperner

#endif  // SPERNER_WEIGHTS_H_
