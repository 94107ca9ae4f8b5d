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

#include "sperner/vertex_set.h"

#include <cassert>

namespace sperner {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  assert(universe <= 64);
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::of(std::size_t universe,
                        std::initializer_list<std::size_t> members) {
  VertexSet s(universe);
  for (std::size_t i : members) s.insert(i);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::difference_size(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    n += static_cast<std::size_t>(std::popcount(words_[w] & ~other.words_[w]));
  }
  return n;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet r = *this;
  r |= other;
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet r = *this;
  r &= other;
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet r = *this;
  r -= other;
  return r;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::optional<std::size_t> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> VertexSet::to_mask() const {
  if (universe_ > 64) return std::nullopt;
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::remap(std::size_t new_universe,
                           const std::vector<std::size_t>& mapping) const {
  VertexSet r(new_universe);
  for_each([&](std::size_t i) { r.insert(mapping[i]); });
  return r;
}

std::size_t VertexSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The set holding the lowest differing element is smaller unless the
    // other set has nothing beyond that position (then it is a prefix).
    const bool mine = (words_[w] & low) != 0;
    const VertexSet& without = mine ? other : *this;
    bool tail = (without.words_[w] & ~(low | (low - 1))) != 0;
    for (std::size_t v = w + 1; !tail && v < without.words_.size(); ++v) {
      tail = without.words_[v] != 0;
    }
    if (mine) return tail ? std::strong_ordering::less : std::strong_ordering::greater;
    return tail ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (words_.size() != other.words_.size()) {
    // Different universes: fall back to comparing any remaining bits.
    const VertexSet& longer = words_.size() > other.words_.size() ? *this : other;
    for (std::size_t w = n; w < longer.words_.size(); ++w) {
      if (longer.words_[w] != 0) {
        return &longer == this ? std::strong_ordering::greater
                               : std::strong_ordering::less;
      }
    }
  }
  return universe_ <=> other.universe_;
}

}  // namespace sperner
