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

#include "sperner_cli/verify.h"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sperner/decomposition.h"
#include "sperner/gen.h"
#include "sperner/graphs.h"
#include "sperner/hypergraph.h"
#include "sperner/io.h"
#include "sperner/oracle.h"
#include "sperner/weights.h"

namespace sperner::cli {
namespace {

constexpr std::size_t kEnumerationLimit = 5;
constexpr std::size_t kFullGraphLimit = 5;
constexpr std::size_t kPartialGraphLimit = 6;
constexpr std::size_t kRandomPerSize = 40;

class Sweep {
 public:
  Sweep(std::vector<PropertyRow>& rows, std::string name) : rows_(rows), index_(rows.size()) {
    rows_.push_back(PropertyRow{std::move(name), true, 0, ""});
  }

  // Records one checked instance; keeps the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    PropertyRow& row = rows_[index_];
    ++row.checked;
    if (!ok && row.passed) {
      row.passed = false;
      row.detail = describe();
    }
  }

 private:
  std::vector<PropertyRow>& rows_;
  std::size_t index_;
};

std::string one_line(const Hypergraph& h) {
  std::string s = format_hg(h);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::function<std::string()> about(const Hypergraph& h) {
  return [h] { return one_line(h); };
}

bool is_reduced(const Hypergraph& h) {
  const VertexClasses c = vertex_classes(h);
  return c.universal.empty() && c.isolated.empty() && c.twin_pairs.empty();
}

bool same_profile(const Hypergraph& a, const Hypergraph& b) {
  return sorted_edge_sizes(a) == sorted_edge_sizes(b) &&
         sorted_vertex_degrees(a) == sorted_vertex_degrees(b);
}

}  // namespace

std::vector<PropertyRow> verify_theorems(std::size_t cap) {
  std::vector<PropertyRow> rows;
  const std::size_t enum_n = std::min(cap, kEnumerationLimit);

  std::vector<Hypergraph> all;
  std::vector<Hypergraph> one_sperner;
  for (std::size_t n = 0; n <= enum_n; ++n) {
    for_each_sperner(n, [&](const Hypergraph& h) {
      all.push_back(h);
      if (is_one_sperner(h)) one_sperner.push_back(h);
    });
  }
  std::vector<Hypergraph> randoms;
  for (std::size_t n = 0; n <= cap; ++n) {
    for (std::size_t s = 0; s < kRandomPerSize; ++s) randoms.push_back(random_one_sperner(n, 1000 * n + s));
  }
  std::vector<Hypergraph> instances = one_sperner;
  instances.insert(instances.end(), randoms.begin(), randoms.end());

  {
    static const std::size_t kCounts[] = {2, 3, 6, 20, 168, 7581};
    Sweep sweep(rows, "antichain_counts");
    std::vector<std::size_t> counts(enum_n + 1, 0);
    for (const Hypergraph& h : all) ++counts[h.num_vertices()];
    for (std::size_t n = 0; n <= enum_n; ++n) {
      sweep.check(counts[n] == kCounts[n], [&, n] {
        return "n=" + std::to_string(n) + " count " + std::to_string(counts[n]);
      });
    }
  }
  {
    Sweep sweep(rows, "one_sperner_is_sperner_and_dually_sperner");
    for (const Hypergraph& h : all) {
      sweep.check(is_one_sperner(h) == (is_sperner(h) && is_dually_sperner(h)), about(h));
    }
  }
  {
    Sweep sweep(rows, "complement_of_one_sperner");
    for (const Hypergraph& h : instances) {
      sweep.check(is_one_sperner(complement(h)) && complement(complement(h)) == h, about(h));
    }
  }
  {
    Sweep sweep(rows, "universal_iff_isolated_in_complement");
    for (const Hypergraph& h : all) {
      const VertexClasses a = vertex_classes(h);
      const VertexClasses b = vertex_classes(complement(h));
      sweep.check(a.universal == b.isolated && a.isolated == b.universal, about(h));
    }
  }
  {
    Sweep sweep(rows, "safe_gluing_closure");
    for (std::size_t i = 0; i + 1 < randoms.size(); ++i) {
      const Hypergraph& h1 = randoms[i];
      std::vector<VertexId> renamed;
      const Hypergraph& src = randoms[i + 1];
      for (const VertexId& v : src.vertices()) renamed.emplace_back("r" + v.str());
      const Hypergraph h2 = Hypergraph::from_sets(renamed, src.edges());
      const Hypergraph g = glue(h1, h2, VertexId("zz"));
      const bool expect = is_safe(h1, h2);
      sweep.check(is_one_sperner(g) == expect && is_dually_sperner(g), about(g));
    }
    for (std::size_t n = 0; n <= cap; ++n) {
      // E1 = {V1} glued with E2 = {{}} must fail Sperner.
      std::vector<VertexId> v;
      for (std::size_t i = 0; i < n; ++i) v.emplace_back("u" + std::to_string(i));
      const Hypergraph h1 = Hypergraph::from_sets(v, {VertexSet::full(n)});
      const Hypergraph g = glue(h1, Hypergraph::empty_edge_only(), VertexId("zz"));
      sweep.check(!is_sperner(g) && is_dually_sperner(g), about(g));
    }
  }
  {
    Sweep sweep(rows, "decomposition_vertex_exists");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() == 0) continue;
      const VertexId z = find_decomposition_vertex(h);
      bool any = false;
      for (const VertexId& v : h.vertices()) any = any || is_z_decomposable(h, v);
      sweep.check(any && is_z_decomposable(h, z), about(h));
    }
  }
  {
    Sweep sweep(rows, "decomposition_round_trip");
    for (const Hypergraph& h : instances) {
      const Hypergraph back = rebuild(decompose_fully(h));
      bool ok = is_one_sperner(back) && same_profile(h, back);
      if (ok && h.num_vertices() <= 5) {
        ok = permutation_equivalent(incidence_matrix(h), incidence_matrix(back));
      }
      sweep.check(ok, about(h));
    }
  }
  {
    Sweep sweep(rows, "complement_decomposable_at_same_vertex");
    for (const Hypergraph& h : instances) {
      for (const VertexId& z : h.vertices()) {
        if (is_z_decomposable(h, z)) sweep.check(is_z_decomposable(complement(h), z), about(h));
      }
    }
  }
  {
    Sweep sweep(rows, "maximum_edge_nesting");
    for (const Hypergraph& h : instances) {
      sweep.check(!max_edge_nesting_violation(h).has_value(), about(h));
    }
  }
  {
    Sweep sweep(rows, "stars_and_antistars");
    for (std::size_t nx = 0; nx <= 3; ++nx) {
      for (std::size_t ny = 1; ny <= 4; ++ny) {
        std::vector<VertexId> x, y, v;
        for (std::size_t i = 0; i < nx; ++i) x.emplace_back("x" + std::to_string(i));
        for (std::size_t i = 0; i < ny; ++i) y.emplace_back("y" + std::to_string(i));
        v = x;
        v.insert(v.end(), y.begin(), y.end());
        for (const Hypergraph& h : {star(v, x, y), antistar(v, x, y)}) {
          bool ok = is_one_sperner(h);
          for (const VertexId& z : h.vertices()) ok = ok && is_z_decomposable(h, z);
          sweep.check(ok, about(h));
        }
        // complement(star(V, X, Y)) = antistar(V, V \ (X ∪ Y), Y).
        std::vector<VertexId> wider = x;
        wider.emplace_back("w");
        wider.insert(wider.end(), y.begin(), y.end());
        sweep.check(complement(star(wider, x, y)) == antistar(wider, {VertexId("w")}, y),
                    [] { return "complement of a star"; });
      }
    }
  }
  {
    Sweep separator(rows, "threshold_separator");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() > 16) continue;
      separator.check(verify_threshold_separator(h, threshold_separator(h)).ok, about(h));
    }
  }
  {
    Sweep equalizing(rows, "equalizing_weights");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() > 16) continue;
      equalizing.check(verify_equalizing(h, equalizing_weights(h)).ok, about(h));
    }
  }
  {
    Sweep sweep(rows, "incidence_rank_equals_edge_count");
    for (const Hypergraph& h : instances) {
      if (h.num_edges() == 1 && h.edges()[0].empty()) continue;
      sweep.check(char_rank(h) == h.num_edges(), about(h));
    }
  }
  {
    Sweep sweep(rows, "edges_at_most_vertices");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() > 0) sweep.check(h.num_edges() <= h.num_vertices(), about(h));
    }
  }
  {
    Sweep sweep(rows, "edge_lower_bound_without_special_vertices");
    for (const Hypergraph& h : one_sperner) {
      const std::size_t n = h.num_vertices();
      if (n < 2 || !is_reduced(h)) continue;
      sweep.check(h.num_edges() >= (n + 3) / 2, about(h));
    }
    for (std::size_t k = 2; k <= 6; ++k) {
      const Hypergraph h = extremal_family(k);
      const std::size_t n = h.num_vertices();
      sweep.check(is_one_sperner(h) && is_reduced(h) && n == (std::size_t{1} << k) - 2 &&
                      h.num_edges() == (n + 3) / 2,
                  [k] { return "extremal k=" + std::to_string(k); });
    }
  }
  {
    Sweep sweep(rows, "normalized_vector");
    for (const Hypergraph& h : instances) {
      if (h.num_edges() == 0 || (h.num_edges() == 1 && h.edges()[0].empty())) continue;
      const RationalVector x = normalized_vector(h);
      bool ok = true;
      Rational total = 0;
      for (const Rational& q : x.entries) {
        ok = ok && q >= 0;
        total += q;
      }
      for (const VertexSet& e : h.edges()) {
        Rational row = 0;
        e.for_each([&](std::size_t v) { row += x.entries[v]; });
        ok = ok && row == 1;
      }
      sweep.check(ok && total >= 1, about(h));
    }
  }
  {
    Sweep sweep(rows, "lp_oracle_certifies_one_sperner");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() > std::min<std::size_t>(cap, 12)) continue;
      const ThresholdResult r = is_threshold(h);
      sweep.check(r.threshold() && verify_threshold_separator(h, r.certificate->scaled()).ok,
                  about(h));
    }
  }
  {
    Sweep sweep(rows, "one_sperner_is_2_asummable");
    for (const Hypergraph& h : instances) {
      if (h.num_vertices() > std::min<std::size_t>(cap, 10)) continue;
      sweep.check(is_k_asummable(h, 2).asummable, about(h));
    }
  }

  const std::size_t graph_n = std::min(cap, kPartialGraphLimit);
  Sweep four_way(rows, "threshold_graph_equivalence");
  Sweep orderings(rows, "forbidden_subgraphs_match_split_ordering");
  Sweep stable(rows, "stable_set_hypergraph_variant");
  Sweep conformal(rows, "clique_hypergraph_conformal");
  Sweep clique_pairs(rows, "two_asummable_clique_pairs");
  for (std::size_t n = 0; n <= graph_n; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      const Graph g = Graph::from_code(n, code);
      const auto describe = [&g] { return format_gr(g); };
      const Hypergraph c = clique_hypergraph(g);
      const ForbiddenCheck forbidden = is_threshold_graph_forbidden(g);
      const bool one = is_one_sperner(c);
      const AsummabilityResult summable = is_k_asummable(c, 2);
      bool agree = forbidden.threshold == one && one == summable.asummable;
      if (n <= kFullGraphLimit) agree = agree && is_threshold(c).threshold() == one;
      four_way.check(agree, describe);

      orderings.check(is_threshold_graph_ordering(g).threshold == forbidden.threshold, describe);
      if (n <= kFullGraphLimit) {
        stable.check(is_one_sperner(stable_set_hypergraph(g)) == forbidden.threshold,
              describe);
      }
      conformal.check(is_conformal(c), describe);
      if (summable.asummable && n <= kFullGraphLimit) {
        bool ok = true;
        for (const VertexSet& a : c.edges()) {
          for (const VertexSet& b : c.edges()) {
            (a - b).for_each([&](std::size_t x) {
              (b - a).for_each([&](std::size_t y) {
                VertexSet rest = a | b;
                rest.erase(x);
                rest.erase(y);
                ok = ok && is_independent(c, rest) && !g.adjacent(x, y);
              });
            });
          }
        }
        clique_pairs.check(ok, describe);
      }
    }
  }
  return rows;
}

}  // namespace sperner::cli
