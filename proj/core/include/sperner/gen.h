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

#ifndef SPERNER_GEN_H_
#define SPERNER_GEN_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sperner/decomposition.h"
#include "sperner/hypergraph.h"

namespace sperner {

// Reproducible source: std::mt19937_64 (its output sequence is fixed by the
// standard) with rejection sampling for bounded draws, so streams match across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Edges X ∪ {y} for y in Y, in Y order. Throws InvalidGenerator unless X and
// Y are disjoint, Y is non-empty and both lie in V.
Hypergraph star(const std::vector<VertexId>& v, const std::vector<VertexId>& x,
                const std::vector<VertexId>& y);
// Edges X ∪ (Y \ {y}) for y in Y.
Hypergraph antistar(const std::vector<VertexId>& v, const std::vector<VertexId>& x,
                    const std::vector<VertexId>& y);

inline constexpr std::size_t kDefaultExtremalCap = 12;

// H_2 = ({v1, v2}, {{v1}, {v2}}); H_k glues H_{k-1} plus an isolated vertex
// onto a fresh copy of H_{k-1}. Labels v1, v2, ... in creation order.
// 2^k - 2 vertices, 2^(k-1) edges. Throws InvalidGenerator for k < 2,
// CapExceeded for k > cap.
Hypergraph extremal_family(std::size_t k, std::size_t cap = kDefaultExtremalCap);

// A random tree with n internal nodes labelled v1..vn, every node safe. Each
// step either extends a built subtree with a leaf factor or glues two built
// subtrees; unsafe draws are redrawn. Deterministic in (n, seed).
DecompositionTree random_one_sperner_tree(std::size_t n, std::uint64_t seed);
// rebuild(random_one_sperner_tree(n, seed)).
Hypergraph random_one_sperner(std::size_t n, std::uint64_t seed);

}  // namespace sperner

#endif  // SPERNER_GEN_H_
