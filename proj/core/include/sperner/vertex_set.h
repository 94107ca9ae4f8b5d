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

#ifndef SPERNER_VERTEX_SET_H_
#define SPERNER_VERTEX_SET_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sperner {

// A subset of {0, ..., universe-1}, stored as a packed bitset. Index i is the
// position of a vertex in its owning hypergraph's vertex list, so bit order is
// incidence-matrix column order.
//
// Binary operations require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet of(std::size_t universe,
                      std::initializer_list<std::size_t> members);

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const;
  bool empty() const;

  bool is_subset_of(const VertexSet& other) const;
  // |*this \ other| without materializing the difference.
  std::size_t difference_size(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  // Set difference.
  VertexSet operator-(const VertexSet& other) const;
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  // Complement relative to the universe.
  VertexSet complement() const;

  std::vector<std::size_t> elements() const;
  std::optional<std::size_t> first() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Lossless only for universe <= 64.
  std::optional<std::uint64_t> to_mask() const;

  // Re-indexes into a new universe; member i becomes mapping[i].
  VertexSet remap(std::size_t new_universe,
                  const std::vector<std::size_t>& mapping) const;

  std::size_t hash() const;

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order on the sorted member lists (as used for output
  // ordering), with the universe as tiebreak.
  std::strong_ordering operator<=>(const VertexSet& other) const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace sperner

#endif  // SPERNER_VERTEX_SET_H_
