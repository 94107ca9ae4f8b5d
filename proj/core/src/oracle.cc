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

#include "sperner/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "sperner/error.h"
#include "sperner/exact_lp.h"

namespace sperner {
namespace {

void require_at_most(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, std::string(what) + ": " + std::to_string(n) +
                                             " vertices exceeds cap " + std::to_string(cap));
  }
}

// dependent[X] for every X, by closing the edge masks upward.
std::vector<std::uint8_t> dependence_table(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::uint8_t> dep(std::size_t{1} << n, 0);
  for (const VertexSet& e : h.edges()) dep[*e.to_mask()] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < dep.size(); ++x) {
      if ((x & bit) && dep[x ^ bit]) dep[x] = 1;
    }
  }
  return dep;
}

std::vector<std::uint64_t> maximal_independent_masks(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::vector<std::uint8_t> dep = dependence_table(h);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < dep.size(); ++x) {
    if (dep[x]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(x & bit) && !dep[x | bit]) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

ThresholdCertificate uniform_certificate(const Hypergraph& h, Rational t) {
  ThresholdCertificate c;
  c.vertices = h.vertices();
  c.weights.assign(h.num_vertices(), Rational(1));
  c.threshold = std::move(t);
  return c;
}

}  // namespace

bool is_independent(const Hypergraph& h, const VertexSet& x) {
  for (const VertexSet& e : h.edges()) {
    if (e.is_subset_of(x)) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h, const OracleCaps& caps) {
  require_at_most(h.num_vertices(), std::min<std::size_t>(caps.independent_enum, 30),
                  "maximal independent set enumeration");
  std::vector<VertexSet> out;
  for (std::uint64_t x : maximal_independent_masks(h)) {
    out.push_back(VertexSet::from_mask(h.num_vertices(), x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_edges(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for (const VertexSet& e : h.edges()) {
    bool minimal = true;
    for (const VertexSet& f : h.edges()) {
      if (f != e && f.is_subset_of(e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

WeightAssignment ThresholdCertificate::scaled() const {
  BigInt scale = threshold.get_den();
  for (const Rational& w : weights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den_mpz_t());
  WeightAssignment wa;
  wa.vertices = vertices;
  wa.weights.reserve(weights.size());
  for (const Rational& w : weights) wa.weights.push_back(w.get_num() * (scale / w.get_den()));
  wa.threshold = threshold.get_num() * (scale / threshold.get_den());
  return wa;
}

ThresholdResult is_threshold(const Hypergraph& h, const OracleCaps& caps) {
  const std::size_t n = h.num_vertices();
  require_at_most(n, std::min<std::size_t>(caps.threshold, 30), "threshold oracle");

  const std::vector<VertexSet> mins = minimal_edges(h);
  ThresholdResult result;
  if (mins.empty()) {
    result.certificate = uniform_certificate(h, Rational(static_cast<long>(n + 1)));
    return result;
  }
  if (mins.size() == 1 && mins[0].empty()) {
    result.certificate = uniform_certificate(h, Rational(0));
    return result;
  }

  // Variables: w_1..w_n, t.
  LinearSystem lp;
  lp.num_vars = n + 1;
  std::vector<ThresholdConstraint> meaning;
  for (const VertexSet& e : mins) {
    std::vector<Rational> row(n + 1, 0);
    e.for_each([&](std::size_t v) { row[v] = 1; });
    row[n] = -1;
    lp.add(std::move(row), 0);
    meaning.push_back({ThresholdConstraint::Kind::kEdge, e, 0});
  }
  for (std::uint64_t s : maximal_independent_masks(h)) {
    std::vector<Rational> row(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (s >> v & 1) row[v] = -1;
    }
    row[n] = 1;
    lp.add(std::move(row), 1);
    meaning.push_back({ThresholdConstraint::Kind::kIndependent, VertexSet::from_mask(n, s), 0});
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> row(n + 1, 0);
    row[v] = 1;
    lp.add(std::move(row), 1);
    meaning.push_back({ThresholdConstraint::Kind::kPositiveWeight, VertexSet::of(n, {v}), 0});
  }
  {
    std::vector<Rational> row(n + 1, 0);
    row[n] = 1;
    lp.add(std::move(row), 1);
    meaning.push_back({ThresholdConstraint::Kind::kPositiveThreshold, VertexSet(n), 0});
  }

  FeasibilityResult solved = solve_feasibility(lp);
  if (solved.feasible) {
    ThresholdCertificate c;
    c.vertices = h.vertices();
    c.weights.assign(solved.x.begin(), solved.x.begin() + static_cast<std::ptrdiff_t>(n));
    c.threshold = solved.x[n];
    result.certificate = std::move(c);
  } else {
    ThresholdRefusal refusal;
    for (std::size_t i = 0; i < solved.farkas.size(); ++i) {
      if (solved.farkas[i] > 0) {
        meaning[i].multiplier = solved.farkas[i];
        refusal.infeasible_subset.push_back(std::move(meaning[i]));
      }
    }
    result.refusal = std::move(refusal);
  }
  return result;
}

namespace {

// Characteristic vectors packed with `width` bits per vertex; sums of at most
// 2^width - 1 sets never carry between vertices.
struct Packing {
  unsigned width;
  std::uint64_t key(std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask != 0) {
      const int v = std::countr_zero(mask);
      out |= std::uint64_t{1} << (width * static_cast<unsigned>(v));
      mask &= mask - 1;
    }
    return out;
  }
};

// Calls visit(indices, sum) for every non-decreasing index k-tuple over keys.
// Stops when visit returns true; returns whether it stopped.
template <typename Visit>
bool for_each_multiset(const std::vector<std::uint64_t>& keys, std::size_t k,
                       std::vector<std::size_t>& picked, std::size_t start, std::uint64_t sum,
                       Visit&& visit) {
  if (picked.size() == k) return visit(picked, sum);
  for (std::size_t i = start; i < keys.size(); ++i) {
    picked.push_back(i);
    if (for_each_multiset(keys, k, picked, i, sum + keys[i], visit)) return true;
    picked.pop_back();
  }
  return false;
}

class SumTable {
 public:
  explicit SumTable(unsigned key_bits) {
    if (key_bits <= 26) bits_.assign((std::size_t{1} << key_bits) / 64 + 1, 0);
  }
  void insert(std::uint64_t s) {
    if (!bits_.empty()) {
      bits_[s >> 6] |= std::uint64_t{1} << (s & 63);
    } else {
      set_.insert(s);
    }
  }
  bool contains(std::uint64_t s) const {
    if (!bits_.empty()) return (bits_[s >> 6] >> (s & 63)) & 1;
    return set_.contains(s);
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> set_;
};

}  // namespace

AsummabilityResult is_k_asummable(const Hypergraph& h, std::size_t k, const OracleCaps& caps) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  const std::size_t n = h.num_vertices();
  require_at_most(n, caps.asummable(k), "asummability search");
  const Packing pack{static_cast<unsigned>(std::bit_width(k))};
  const std::size_t key_bits = pack.width * n;
  if (key_bits > 64 || n > 30) {
    throw Error(ErrorCode::kCapExceeded, "asummability search: packed sums exceed 64 bits");
  }

  const std::vector<std::uint8_t> dep = dependence_table(h);
  std::vector<std::uint64_t> indep_masks, dep_masks, indep_keys, dep_keys;
  for (std::uint64_t x = 0; x < dep.size(); ++x) {
    (dep[x] ? dep_masks : indep_masks).push_back(x);
    (dep[x] ? dep_keys : indep_keys).push_back(pack.key(x));
  }
  AsummabilityResult result;
  if (indep_masks.empty() || dep_masks.empty()) return result;

  SumTable table(static_cast<unsigned>(key_bits));
  std::vector<std::size_t> picked;
  for_each_multiset(indep_keys, k, picked, 0, 0, [&](const auto&, std::uint64_t s) {
    table.insert(s);
    return false;
  });

  std::vector<std::size_t> dep_pick;
  std::uint64_t target = 0;
  picked.clear();
  const bool found =
      for_each_multiset(dep_keys, k, picked, 0, 0, [&](const auto& idx, std::uint64_t s) {
        if (!table.contains(s)) return false;
        dep_pick = idx;
        target = s;
        return true;
      });
  if (!found) return result;

  std::vector<std::size_t> indep_pick;
  picked.clear();
  for_each_multiset(indep_keys, k, picked, 0, 0, [&](const auto& idx, std::uint64_t s) {
    if (s != target) return false;
    indep_pick = idx;
    return true;
  });

  AsummabilityWitness w;
  for (std::size_t i : indep_pick) w.independent_sets.push_back(VertexSet::from_mask(n, indep_masks[i]));
  for (std::size_t i : dep_pick) w.dependent_sets.push_back(VertexSet::from_mask(n, dep_masks[i]));
  result.asummable = false;
  result.witness = std::move(w);
  return result;
}

bool validate_witness(const Hypergraph& h, const AsummabilityWitness& w) {
  const std::size_t k = w.independent_sets.size();
  if (k < 2 || w.dependent_sets.size() != k) return false;
  std::vector<long> balance(h.num_vertices(), 0);
  for (const VertexSet& a : w.independent_sets) {
    if (a.universe() != h.num_vertices() || !is_independent(h, a)) return false;
    a.for_each([&](std::size_t v) { ++balance[v]; });
  }
  for (const VertexSet& b : w.dependent_sets) {
    if (b.universe() != h.num_vertices() || is_independent(h, b)) return false;
    b.for_each([&](std::size_t v) { --balance[v]; });
  }
  return std::all_of(balance.begin(), balance.end(), [](long x) { return x == 0; });
}

namespace {

void antichains(std::uint64_t next, std::uint64_t count, std::vector<std::uint64_t>& chosen,
                const std::function<void(const std::vector<std::uint64_t>&)>& emit) {
  if (next == count) {
    emit(chosen);
    return;
  }
  antichains(next + 1, count, chosen, emit);
  for (std::uint64_t c : chosen) {
    if ((c & next) == c || (c & next) == next) return;
  }
  chosen.push_back(next);
  antichains(next + 1, count, chosen, emit);
  chosen.pop_back();
}

}  // namespace

void for_each_sperner(std::size_t n, const std::function<void(const Hypergraph&)>& visit,
                      std::size_t cap) {
  require_at_most(n, std::min<std::size_t>(cap, 6), "Sperner enumeration");
  std::vector<VertexId> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.emplace_back(std::to_string(i));
  std::vector<std::uint64_t> chosen;
  antichains(0, std::uint64_t{1} << n, chosen, [&](const std::vector<std::uint64_t>& masks) {
    std::vector<VertexSet> edges;
    edges.reserve(masks.size());
    for (std::uint64_t m : masks) edges.push_back(VertexSet::from_mask(n, m));
    visit(Hypergraph::from_sets(labels, std::move(edges)));
  });
}

std::vector<Hypergraph> enumerate_sperner(std::size_t n, std::size_t cap) {
  std::vector<Hypergraph> out;
  for_each_sperner(n, [&](const Hypergraph& h) { out.push_back(h); }, cap);
  return out;
}

}  // namespace sperner
