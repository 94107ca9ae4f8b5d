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

#ifndef SPERNER_ORACLE_H_
#define SPERNER_ORACLE_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sperner/hypergraph.h"
#include "sperner/numeric.h"
#include "sperner/weights.h"

namespace sperner {

// Size limits for the exhaustive oracles. Exceeding one raises CapExceeded.
struct OracleCaps {
  std::size_t independent_enum = 20;
  std::size_t threshold = 16;
  std::size_t asummable_k2 = 12;
  std::size_t asummable_k3 = 8;
  std::size_t asummable_large_k = 6;
  std::size_t enumerate = 5;

  std::size_t asummable(std::size_t k) const {
    return k <= 2 ? asummable_k2 : (k == 3 ? asummable_k3 : asummable_large_k);
  }
};

// X contains no edge.
bool is_independent(const Hypergraph& h, const VertexSet& x);
// Inclusion-maximal independent sets, sorted. Throws CapExceeded.
std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h,
                                                const OracleCaps& caps = {});
// Edges not containing another edge.
std::vector<VertexSet> minimal_edges(const Hypergraph& h);

struct ThresholdCertificate {
  std::vector<VertexId> vertices;
  std::vector<Rational> weights;
  Rational threshold;

  // Multiplied by the least common denominator.
  WeightAssignment scaled() const;
};

struct ThresholdConstraint {
  enum class Kind {
    kEdge,            // w(e) - t >= 0
    kIndependent,     // t - w(S) >= 1
    kPositiveWeight,  // w(v) >= 1
    kPositiveThreshold,
  };
  Kind kind;
  VertexSet set;        // e, S or {v}
  Rational multiplier;  // Farkas coefficient, > 0
};

struct ThresholdRefusal {
  std::vector<ThresholdConstraint> infeasible_subset;
};

struct ThresholdResult {
  std::optional<ThresholdCertificate> certificate;
  std::optional<ThresholdRefusal> refusal;

  bool threshold() const { return certificate.has_value(); }
};

// Exact LP: w(e) >= t for minimal edges, w(S) <= t - 1 for maximal
// independent sets, w >= 1, t >= 1 when a non-empty edge exists. Throws
// CapExceeded when n exceeds caps.threshold.
ThresholdResult is_threshold(const Hypergraph& h, const OracleCaps& caps = {});

struct AsummabilityWitness {
  std::vector<VertexSet> independent_sets;
  std::vector<VertexSet> dependent_sets;
};

struct AsummabilityResult {
  bool asummable = true;
  std::optional<AsummabilityWitness> witness;
};

// Searches k independent and k dependent sets (repetition allowed) with equal
// characteristic-vector sums. Throws CapExceeded, InvalidArgument for k < 2.
AsummabilityResult is_k_asummable(const Hypergraph& h, std::size_t k,
                                  const OracleCaps& caps = {});

// Lengths equal and >= 2, memberships right, sums equal.
bool validate_witness(const Hypergraph& h, const AsummabilityWitness& w);

// Every antichain over vertices "1".."n", once each, in a fixed order.
// Throws CapExceeded for n > cap.
void for_each_sperner(std::size_t n, const std::function<void(const Hypergraph&)>& visit,
                      std::size_t cap = OracleCaps{}.enumerate);
std::vector<Hypergraph> enumerate_sperner(std::size_t n,
                                          std::size_t cap = OracleCaps{}.enumerate);

}  // namespace sperner

#endif  // SPERNER_ORACLE_H_
