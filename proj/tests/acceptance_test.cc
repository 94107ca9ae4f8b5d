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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sperner/decomposition.h"
#include "sperner/gen.h"
#include "sperner/graphs.h"
#include "sperner/oracle.h"
#include "sperner/weights.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace sperner {
namespace {

using testing::Mask;

struct Verdict {
  bool ok = true;
  std::string summary;
  std::string failure;  // first failure only
  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
};

// Instances shared by criteria 1, 3, 4, 5 and 8.
struct Corpus {
  std::vector<Hypergraph> enumerated;  // every 1-Sperner antichain, n <= 5
  std::vector<Hypergraph> random;      // 1000 gluing-tree instances, n <= 14
  std::vector<const Hypergraph*> all() const {
    std::vector<const Hypergraph*> out;
    for (const Hypergraph& h : enumerated) out.push_back(&h);
    for (const Hypergraph& h : random) out.push_back(&h);
    return out;
  }
};

Corpus BuildCorpus() {
  Corpus c;
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_sperner(n, [&](const Hypergraph& h) {
      if (testing::naive_sperner(h) && testing::naive_dually_sperner(h)) c.enumerated.push_back(h);
    });
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    c.random.push_back(random_one_sperner(seed % 15, 0x5eed0000 + seed));
  }
  return c;
}

bool EmptyEdgeOnly(const Hypergraph& h) { return h.num_edges() == 1 && h.edges()[0].empty(); }

std::string Name(const Hypergraph& h) {
  return "n=" + std::to_string(h.num_vertices()) + " m=" + std::to_string(h.num_edges());
}

BigInt Sum(const std::vector<BigInt>& w, Mask x) {
  BigInt s = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (x >> v & 1) s += w[v];
  }
  return s;
}

Verdict RoundTrip(const Corpus& c) {
  Verdict v;
  for (const Hypergraph& h : c.enumerated) {
    const Hypergraph back = rebuild(decompose_fully(h));
    if (!testing::brute_permutation_equivalent(testing::edge_masks(back), testing::edge_masks(h),
                                               h.num_vertices()) ||
        !permutation_equivalent(incidence_matrix(back), incidence_matrix(h))) {
      v.fail("enumerated " + Name(h) + " not permutation-equivalent");
    }
  }
  for (const Hypergraph& h : c.random) {
    const Hypergraph back = rebuild(decompose_fully(h));
    if (sorted_edge_sizes(back) != sorted_edge_sizes(h) ||
        sorted_vertex_degrees(back) != sorted_vertex_degrees(h)) {
      v.fail("random " + Name(h) + " profile mismatch");
    }
  }
  v.summary = std::to_string(c.enumerated.size()) + " enumerated, " +
              std::to_string(c.random.size()) + " random";
  return v;
}

Verdict GluingClosure() {
  Verdict v;
  Rng rng(0xc10);
  int safe = 0;
  while (safe < 1000) {
    const Hypergraph h1 = testing::random_one_sperner_prefixed(rng, rng.below(7), "a");
    const Hypergraph h2 = testing::random_one_sperner_prefixed(rng, rng.below(7), "b");
    if (!is_safe(h1, h2)) continue;
    const Hypergraph g = glue(h1, h2, VertexId("z"));
    if (!testing::naive_sperner(g) || !testing::naive_dually_sperner(g)) {
      v.fail("safe gluing " + Name(g) + " not 1-Sperner");
    }
    ++safe;
  }
  // E1 = {V1} and E2 = {{}}: a single full edge against the empty-edge factor.
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = rng.below(8);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < r; ++j) labels.push_back("a" + std::to_string(j));
    const Hypergraph h1 = Hypergraph::of(labels, {labels});
    const Hypergraph g = glue(h1, Hypergraph::empty_edge_only(), VertexId("z"));
    if (is_safe(h1, Hypergraph::empty_edge_only())) v.fail("unsafe pair reported safe");
    if (testing::naive_sperner(g)) v.fail("unsafe gluing " + Name(g) + " is Sperner");
  }
  v.summary = "1000 safe, 100 unsafe";
  return v;
}

Verdict Weights(const Corpus& c) {
  Verdict v;
  std::size_t checked = 0;
  for (const Hypergraph* h : c.all()) {
    if (h->num_vertices() > 16) continue;
    const WeightAssignment wa = threshold_separator(*h);
    const WeightAssignment eq = equalizing_weights(*h);
    if (!verify_threshold_separator(*h, wa).ok) v.fail("separator fails on " + Name(*h));
    if (!verify_equalizing(*h, eq).ok) v.fail("equalizing fails on " + Name(*h));
    // Independent scan on the smaller instances.
    if (h->num_vertices() <= 10) {
      const auto masks = testing::edge_masks(*h);
      for (Mask x = 0; x < (Mask{1} << h->num_vertices()); ++x) {
        const BigInt s = Sum(wa.weights, x);
        const bool edge = std::find(masks.begin(), masks.end(), x) != masks.end();
        if ((s >= wa.threshold) != testing::naive_contains_edge(masks, x) ||
            (Sum(eq.weights, x) == eq.threshold) != edge) {
          v.fail("subset scan disagrees on " + Name(*h));
          break;
        }
      }
    }
    ++checked;
  }
  v.summary = std::to_string(checked) + " instances";
  return v;
}

Verdict RankAndBounds(const Corpus& c) {
  Verdict v;
  for (const Hypergraph* h : c.all()) {
    if (!EmptyEdgeOnly(*h)) {
      const std::size_t rank = char_rank(*h);
      if (rank != h->num_edges() || rank != testing::bareiss_rank(*h)) {
        v.fail("rank " + std::to_string(rank) + " on " + Name(*h));
      }
    }
    if (h->num_vertices() > 0 && h->num_edges() > h->num_vertices()) v.fail("|E| > |V| on " + Name(*h));
  }
  std::size_t reduced = 0;
  for (const Hypergraph& h : c.enumerated) {
    if (h.num_vertices() < 2) continue;
    const VertexClasses k = vertex_classes(h);
    if (!k.universal.empty() || !k.isolated.empty() || !k.twin_pairs.empty()) continue;
    ++reduced;
    if (h.num_edges() < (h.num_vertices() + 3) / 2) v.fail("lower bound fails on " + Name(h));
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    const Hypergraph h = extremal_family(k);
    const std::size_t n = h.num_vertices(), m = h.num_edges();
    if (n != (std::size_t{1} << k) - 2 || m != (n + 3) / 2 || !is_one_sperner(h)) {
      v.fail("extremal k=" + std::to_string(k) + " " + Name(h));
    }
    const VertexClasses cl = vertex_classes(h);
    if (!cl.universal.empty() || !cl.isolated.empty() || !cl.twin_pairs.empty()) {
      v.fail("extremal k=" + std::to_string(k) + " has special vertices");
    }
    if (char_rank(h) != m) v.fail("extremal rank k=" + std::to_string(k));
  }
  v.summary = std::to_string(reduced) + " reduced enumerated, extremal k=2..6";
  return v;
}

Verdict Normalized(const Corpus& c) {
  Verdict v;
  std::size_t checked = 0;
  for (const Hypergraph* h : c.all()) {
    if (h->num_edges() == 0 || EmptyEdgeOnly(*h)) continue;
    const RationalVector x = normalized_vector(*h);
    Rational total = 0;
    for (const Rational& q : x.entries) {
      if (q < 0) v.fail("negative entry on " + Name(*h));
      total += q;
    }
    if (total < 1) v.fail("sum below one on " + Name(*h));
    for (const VertexSet& e : h->edges()) {
      Rational row = 0;
      e.for_each([&](std::size_t i) { row += x.entries[i]; });
      if (row != 1) v.fail("row sum " + to_fraction_string(row) + " on " + Name(*h));
    }
    // Any exact row combination equal to the all-ones row has sum >= 1.
    if (h->num_vertices() <= 8) {
      if (const auto lambda = testing::solve_row_combination(*h)) {
        Rational s = 0;
        for (const Rational& l : *lambda) s += l;
        if (s < 1) v.fail("row combination sums below one on " + Name(*h));
      }
    }
    ++checked;
  }
  v.summary = std::to_string(checked) + " instances";
  return v;
}

Verdict GraphSweep() {
  Verdict v;
  for (std::uint64_t code = 0; code < 1024; ++code) {
    const Graph g = Graph::from_code(5, code);
    const EquivalenceReport r = threshold_equivalence_report(g);
    if (!r.all_agree() || r.threshold_graph != testing::peel_threshold_graph(g)) {
      v.fail("n=5 code " + std::to_string(code));
    }
  }
  for (std::uint64_t code = 0; code < 32768; ++code) {
    const Graph g = Graph::from_code(6, code);
    const bool c1 = is_threshold_graph_forbidden(g).threshold;
    const Hypergraph cl = clique_hypergraph(g);
    const bool c2 = is_one_sperner(cl);
    const bool c4 = is_k_asummable(cl, 2).asummable;
    if (c1 != c2 || c1 != c4 || c1 != testing::peel_threshold_graph(g)) {
      v.fail("n=6 code " + std::to_string(code));
    }
  }
  v.summary = "1024 graphs on 5 vertices, 32768 on 6";
  return v;
}

Verdict ForbiddenVsOrdering() {
  Verdict v;
  std::size_t graphs = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = Graph::from_code(n, code);
      const bool forbidden = is_threshold_graph_forbidden(g).threshold;
      if (forbidden != is_threshold_graph_ordering(g).threshold ||
          forbidden == testing::brute_has_forbidden(g)) {
        v.fail("n=" + std::to_string(n) + " code " + std::to_string(code));
      }
      if (n <= 5 && is_one_sperner(stable_set_hypergraph(g)) != forbidden) {
        v.fail("stable-set variant n=" + std::to_string(n) + " code " + std::to_string(code));
      }
      ++graphs;
    }
  }
  v.summary = std::to_string(graphs) + " graphs";
  return v;
}

Verdict Oracles(const Corpus& c) {
  Verdict v;
  std::size_t checked = 0;
  for (const Hypergraph* h : c.all()) {
    if (h->num_vertices() > 12) continue;
    const ThresholdResult r = is_threshold(*h);
    if (!r.threshold()) {
      v.fail("no certificate for " + Name(*h));
      continue;
    }
    const WeightAssignment wa = r.certificate->scaled();
    if (!verify_threshold_separator(*h, wa).ok) v.fail("scaled certificate fails on " + Name(*h));
    for (const VertexSet& e : minimal_edges(*h)) {
      BigInt s = 0;
      e.for_each([&](std::size_t i) { s += wa.weights[i]; });
      if (s < wa.threshold) v.fail("edge below t on " + Name(*h));
    }
    for (Mask s : testing::brute_maximal_independent(*h)) {
      if (Sum(wa.weights, s) > wa.threshold - 1) v.fail("independent set reaches t on " + Name(*h));
    }
    if (!is_k_asummable(*h, 2).asummable) v.fail("2-summable: " + Name(*h));
    ++checked;
  }
  const Hypergraph c4 = clique_hypergraph(
      Graph::of({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
  const AsummabilityResult w = is_k_asummable(c4, 2);
  if (w.asummable || !w.witness || !validate_witness(c4, *w.witness) ||
      !testing::brute_2_summable(c4)) {
    v.fail("C4 clique hypergraph witness missing or invalid");
  }
  v.summary = std::to_string(checked) + " certificates, C4 witness valid";
  return v;
}

Verdict Enumeration() {
  Verdict v;
  const std::size_t expected[] = {2, 3, 6, 20, 168, 7581};
  std::string counts;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_sperner(n, [&](const Hypergraph&) { ++count; });
    counts += (n ? " " : "") + std::to_string(count);
    if (count != expected[n]) v.fail("n=" + std::to_string(n) + " count " + std::to_string(count));
    if (count != testing::antichains_by_monotone_pairs(n)) {
      v.fail("monotone-pair counter disagrees at n=" + std::to_string(n));
    }
    if (n <= 4 && count != testing::antichains_by_families(n)) {
      v.fail("family counter disagrees at n=" + std::to_string(n));
    }
  }
  v.summary = "counts " + counts;
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 when no bound applies
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace sperner

int main() {
  using namespace sperner;
  using Clock = std::chrono::steady_clock;

  const auto corpus_start = Clock::now();
  const Corpus corpus = BuildCorpus();
  const double corpus_seconds =
      std::chrono::duration<double>(Clock::now() - corpus_start).count();

  const std::vector<Criterion> criteria = {
      {1, "round_trip", 60, [&] { return RoundTrip(corpus); }},
      {2, "gluing_closure", 0, [] { return GluingClosure(); }},
      {3, "weight_synthesis", 60, [&] { return Weights(corpus); }},
      {4, "rank_and_bounds", 0, [&] { return RankAndBounds(corpus); }},
      {5, "normalized_vector", 0, [&] { return Normalized(corpus); }},
      {6, "graph_equivalence", 300, [] { return GraphSweep(); }},
      {7, "forbidden_vs_ordering", 0, [] { return ForbiddenVsOrdering(); }},
      {8, "oracle_cross_check", 0, [&] { return Oracles(corpus); }},
      {9, "enumeration_counts", 30, [] { return Enumeration(); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.id == 1) seconds += corpus_seconds;
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      v.fail("took " + std::to_string(seconds) + " s");
    }
    std::string detail = v.summary;
    if (!v.ok) detail += (detail.empty() ? "" : "; ") + ("first failure: " + v.failure);
    std::printf("%s %d %s %.2fs %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
