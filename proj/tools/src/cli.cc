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

#include "sperner_cli/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sperner/decomposition.h"
#include "sperner/error.h"
#include "sperner/gen.h"
#include "sperner/graphs.h"
#include "sperner/hypergraph.h"
#include "sperner/io.h"
#include "sperner/oracle.h"
#include "sperner/weights.h"
#include "sperner_cli/verify.h"

namespace sperner::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

std::vector<std::string> names(const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const VertexId& v : ids) out.push_back(v.str());
  return out;
}

std::vector<std::string> names_of(const Hypergraph& h, const VertexSet& s) {
  return names(h.labels_of(s));
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += " " + p;
  return out;
}

json hypergraph_json(const Hypergraph& h) {
  json edges = json::array();
  for (const VertexSet& e : h.edges()) edges.push_back(names_of(h, e));
  return json{{"vertices", names(h.vertices())}, {"edges", std::move(edges)}};
}

const char* flag(bool b) { return b ? "true" : "false"; }

// Shared state for one invocation.
struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void emit(const json& record, const std::string& plain) const {
    if (as_json) {
      out << record.dump() << "\n";
    } else {
      out << plain;
    }
  }
};

// Emits the 1-Sperner violation of h, if any; returns true when h is 1-Sperner.
bool report_one_sperner(const Context& ctx, const Hypergraph& h) {
  auto bad = one_sperner_violation(h);
  if (!bad) return true;
  const auto a = names_of(h, h.edges()[bad->first]);
  const auto b = names_of(h, h.edges()[bad->second]);
  ctx.emit(json{{"one_sperner", false}, {"witness", {a, b}}},
           "one_sperner false\nwitness_edge" + joined(a) + "\nwitness_edge" + joined(b) + "\n");
  return false;
}

int cmd_check(const Context& ctx, const std::string& path) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  const bool sperner = is_sperner(h);
  const bool dual = is_dually_sperner(h);
  const bool one = sperner && dual;
  std::optional<bool> conformal;
  if (sperner) conformal = is_conformal(h);

  json record{{"sperner", sperner}, {"dually_sperner", dual}, {"one_sperner", one},
              {"conformal", conformal ? json(*conformal) : json(nullptr)}};
  std::string plain = std::string("sperner ") + flag(sperner) + "\ndually_sperner " + flag(dual) +
                      "\none_sperner " + flag(one) + "\nconformal " +
                      (conformal ? flag(*conformal) : "n/a") + "\n";
  if (auto bad = one_sperner_violation(h)) {
    const auto a = names_of(h, h.edges()[bad->first]);
    const auto b = names_of(h, h.edges()[bad->second]);
    record["witness"] = {a, b};
    plain += "witness_edge" + joined(a) + "\nwitness_edge" + joined(b) + "\n";
  }
  ctx.emit(record, plain);
  return one ? kOk : kPropertyFails;
}

int cmd_decompose(const Context& ctx, const std::string& path) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  if (!report_one_sperner(ctx, h)) return kPropertyFails;
  const DecompositionTree tree = decompose_fully(h);
  const std::vector<NodeSafety> nodes = node_safety(tree);
  json list = json::array();
  std::string plain = "tree " + to_text(tree) + "\n";
  bool all_safe = true;
  for (const NodeSafety& n : nodes) {
    list.push_back(json{{"z", n.z.str()}, {"safe", n.safe}});
    plain += "node " + n.z.str() + (n.safe ? " safe\n" : " unsafe\n");
    all_safe = all_safe && n.safe;
  }
  ctx.emit(json{{"tree", to_text(tree)}, {"nodes", std::move(list)}}, plain);
  return all_safe ? kOk : kPropertyFails;
}

int cmd_weights(const Context& ctx, const std::string& path, bool equalize, bool verify,
                std::size_t cap) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  if (!report_one_sperner(ctx, h)) return kPropertyFails;
  const WeightAssignment wa = equalize ? equalizing_weights(h) : threshold_separator(h);

  json list = json::array();
  std::string plain;
  for (std::size_t i = 0; i < wa.vertices.size(); ++i) {
    list.push_back(json{{"vertex", wa.vertices[i].str()}, {"weight", wa.weights[i].get_str()}});
    plain += "w " + wa.vertices[i].str() + " " + wa.weights[i].get_str() + "\n";
  }
  plain += "t " + wa.threshold.get_str() + "\n";
  json record{{"weights", std::move(list)}, {"t", wa.threshold.get_str()}};
  int code = kOk;
  if (verify) {
    const SubsetCheck check =
        equalize ? verify_equalizing(h, wa, cap) : verify_threshold_separator(h, wa, cap);
    record["verified"] = check.ok;
    if (check.ok) {
      plain += "verified\n";
    } else {
      const auto bad = check.counterexample ? names_of(h, *check.counterexample)
                                            : std::vector<std::string>{};
      record["counterexample"] = bad;
      record["reason"] = check.reason;
      plain += "counterexample" + joined(bad) + "\nreason " + check.reason + "\n";
      code = kPropertyFails;
    }
  }
  ctx.emit(record, plain);
  return code;
}

int cmd_rank(const Context& ctx, const std::string& path) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  const std::size_t rank = char_rank(h);
  ctx.emit(json{{"rank", rank}, {"edges", h.num_edges()}, {"vertices", h.num_vertices()}},
           "rank " + std::to_string(rank) + "\nedges " + std::to_string(h.num_edges()) +
               "\nvertices " + std::to_string(h.num_vertices()) + "\n");
  return kOk;
}

std::string_view kind_name(ThresholdConstraint::Kind kind) {
  switch (kind) {
    case ThresholdConstraint::Kind::kEdge:
      return "edge";
    case ThresholdConstraint::Kind::kIndependent:
      return "independent";
    case ThresholdConstraint::Kind::kPositiveWeight:
      return "weight";
    case ThresholdConstraint::Kind::kPositiveThreshold:
      return "threshold";
  }
  return "?";
}

int cmd_oracle_threshold(const Context& ctx, const std::string& path, const OracleCaps& caps) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  const ThresholdResult r = is_threshold(h, caps);
  if (r.certificate) {
    const ThresholdCertificate& c = *r.certificate;
    json list = json::array();
    std::string plain = "threshold true\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      const std::string v = to_fraction_string(c.weights[i]);
      list.push_back(json{{"vertex", c.vertices[i].str()}, {"weight", v}});
      plain += "w " + c.vertices[i].str() + " " + v + "\n";
    }
    plain += "t " + to_fraction_string(c.threshold) + "\n";
    ctx.emit(json{{"threshold", true},
                  {"weights", std::move(list)},
                  {"t", to_fraction_string(c.threshold)}},
             plain);
    return kOk;
  }
  json list = json::array();
  std::string plain = "threshold false\n";
  for (const ThresholdConstraint& k : r.refusal->infeasible_subset) {
    const auto members = names_of(h, k.set);
    const std::string m = to_fraction_string(k.multiplier);
    list.push_back(json{{"kind", kind_name(k.kind)}, {"set", members}, {"multiplier", m}});
    plain += "constraint " + std::string(kind_name(k.kind)) + joined(members) + " multiplier " +
             m + "\n";
  }
  ctx.emit(json{{"threshold", false}, {"infeasible", std::move(list)}}, plain);
  return kPropertyFails;
}

int cmd_oracle_asummable(const Context& ctx, const std::string& path, std::size_t k,
                         const OracleCaps& caps) {
  const Hypergraph h = parse_hg(read_source(path, ctx.in));
  const AsummabilityResult r = is_k_asummable(h, k, caps);
  if (r.asummable) {
    ctx.emit(json{{"asummable", true}, {"k", k}},
             "asummable true\nk " + std::to_string(k) + "\n");
    return kOk;
  }
  json a = json::array(), b = json::array();
  std::string plain = "asummable false\nk " + std::to_string(k) + "\n";
  for (const VertexSet& s : r.witness->independent_sets) {
    a.push_back(names_of(h, s));
    plain += "A" + joined(names_of(h, s)) + "\n";
  }
  for (const VertexSet& s : r.witness->dependent_sets) {
    b.push_back(names_of(h, s));
    plain += "B" + joined(names_of(h, s)) + "\n";
  }
  ctx.emit(json{{"asummable", false}, {"k", k}, {"independent", a}, {"dependent", b}}, plain);
  return kPropertyFails;
}

bool is_reduced(const Hypergraph& h) {
  if (!is_one_sperner(h)) return false;
  const VertexClasses c = vertex_classes(h);
  return c.universal.empty() && c.isolated.empty() && c.twin_pairs.empty();
}

int cmd_oracle_enumerate(const Context& ctx, std::size_t n, const std::string& filter,
                         const OracleCaps& caps) {
  std::function<bool(const Hypergraph&)> keep = [](const Hypergraph&) { return true; };
  if (filter == "one-sperner") {
    keep = [](const Hypergraph& h) { return is_one_sperner(h); };
  } else if (filter == "reduced") {
    keep = is_reduced;
  }
  for_each_sperner(
      n,
      [&](const Hypergraph& h) {
        if (keep(h)) ctx.emit(hypergraph_json(h), format_hg(h));
      },
      caps.enumerate);
  return kOk;
}

int cmd_graph_check(const Context& ctx, const std::string& path, const OracleCaps& caps) {
  const Graph g = parse_gr(read_source(path, ctx.in));
  const EquivalenceReport r = threshold_equivalence_report(g, caps);
  json record{{"threshold_graph", r.threshold_graph},
              {"clique_one_sperner", r.clique_one_sperner},
              {"clique_threshold", r.clique_threshold},
              {"clique_2_asummable", r.clique_2_asummable},
              {"agree", r.all_agree()}};
  std::string plain = std::string("threshold_graph ") + flag(r.threshold_graph) +
                      "\nclique_one_sperner " + flag(r.clique_one_sperner) +
                      "\nclique_threshold " + flag(r.clique_threshold) +
                      "\nclique_2_asummable " + flag(r.clique_2_asummable) + "\nagree " +
                      flag(r.all_agree()) + "\n";
  if (r.forbidden) {
    std::vector<std::string> members;
    for (std::size_t v : r.forbidden->vertices) members.push_back(g.vertices()[v].str());
    record["forbidden"] = json{{"kind", to_string(r.forbidden->kind)}, {"vertices", members}};
    plain += "forbidden " + std::string(to_string(r.forbidden->kind)) + joined(members) + "\n";
  }
  if (r.summability) {
    const Hypergraph c = clique_hypergraph(g);
    json a = json::array(), b = json::array();
    for (const VertexSet& s : r.summability->independent_sets) {
      a.push_back(names_of(c, s));
      plain += "A" + joined(names_of(c, s)) + "\n";
    }
    for (const VertexSet& s : r.summability->dependent_sets) {
      b.push_back(names_of(c, s));
      plain += "B" + joined(names_of(c, s)) + "\n";
    }
    record["summability"] = json{{"independent", a}, {"dependent", b}};
  }
  ctx.emit(record, plain);
  return r.threshold_graph && r.all_agree() ? kOk : kPropertyFails;
}

int cmd_graph_cliques(const Context& ctx, const std::string& path) {
  const Graph g = parse_gr(read_source(path, ctx.in));
  const Hypergraph c = clique_hypergraph(g);
  ctx.emit(hypergraph_json(c), format_hg(c));
  return kOk;
}

std::vector<VertexId> to_ids(const std::vector<std::string>& labels) {
  std::vector<VertexId> out;
  for (const std::string& s : labels) {
    if (!VertexId::is_valid(s)) throw UsageError("invalid vertex label '" + s + "'");
    out.emplace_back(s);
  }
  return out;
}

struct GenerateArgs {
  std::vector<std::string> v, x, y;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

int cmd_generate(const Context& ctx, const std::string& family, const GenerateArgs& a) {
  Hypergraph h;
  if (family == "star" || family == "antistar") {
    std::vector<std::string> v = a.v;
    if (v.empty()) {
      v = a.x;
      v.insert(v.end(), a.y.begin(), a.y.end());
    }
    h = family == "star" ? star(to_ids(v), to_ids(a.x), to_ids(a.y))
                         : antistar(to_ids(v), to_ids(a.x), to_ids(a.y));
  } else if (family == "extremal") {
    h = extremal_family(a.k);
  } else {
    h = random_one_sperner(a.n, a.seed);
  }
  ctx.emit(hypergraph_json(h), format_hg(h));
  return kOk;
}

int cmd_verify(const Context& ctx, std::size_t cap) {
  const std::vector<PropertyRow> rows = verify_theorems(cap);
  std::size_t passed = 0;
  for (const PropertyRow& r : rows) {
    passed += r.passed ? 1 : 0;
    std::ostringstream plain;
    plain << (r.passed ? "PASS " : "FAIL ") << r.name << " " << r.checked;
    if (!r.passed) plain << " " << r.detail;
    plain << "\n";
    ctx.emit(json{{"property", r.name},
                  {"passed", r.passed},
                  {"checked", r.checked},
                  {"detail", r.detail}},
             plain.str());
  }
  ctx.emit(json{{"summary", true}, {"passed", passed}, {"total", rows.size()}},
           "summary " + std::to_string(passed) + "/" + std::to_string(rows.size()) + "\n");
  return passed == rows.size() ? kOk : kPropertyFails;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
      return kCapRefused;
    case ErrorCode::kNotSperner:
    case ErrorCode::kNotOneSperner:
    case ErrorCode::kNotDecomposable:
    case ErrorCode::kUnsafeGluing:
      return kPropertyFails;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Sperner hypergraph toolkit", "sperner"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "Line-delimited JSON output");

  std::function<int()> action;
  std::string path;
  OracleCaps caps;

  auto* check = app.add_subcommand("check", "Sperner, dually Sperner, 1-Sperner, conformal flags");
  check->add_option("file", path, "HG file or - for stdin")->required();
  check->callback([&] { action = [&] { return cmd_check(ctx, path); }; });

  auto* decompose = app.add_subcommand("decompose", "Full decomposition tree");
  decompose->add_option("file", path)->required();
  decompose->callback([&] { action = [&] { return cmd_decompose(ctx, path); }; });

  bool verify = false;
  std::size_t verify_cap = kDefaultVerifyCap;
  for (const bool equalize : {false, true}) {
    auto* sub = app.add_subcommand(equalize ? "equalize" : "weights",
                                   equalize ? "Equalizing weights" : "Threshold separator");
    sub->add_option("file", path)->required();
    sub->add_flag("--verify", verify, "Exhaustive subset verification");
    sub->add_option("--cap", verify_cap, "Vertex cap for --verify");
    sub->callback([&, equalize] {
      action = [&, equalize] { return cmd_weights(ctx, path, equalize, verify, verify_cap); };
    });
  }

  auto* rank = app.add_subcommand("rank", "Rank of the incidence matrix over the rationals");
  rank->add_option("file", path)->required();
  rank->callback([&] { action = [&] { return cmd_rank(ctx, path); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force and exact LP oracles");
  oracle->require_subcommand(1);
  auto* threshold = oracle->add_subcommand("threshold", "Exact LP threshold test");
  threshold->add_option("file", path)->required();
  threshold->add_option("--cap", caps.threshold, "Vertex cap");
  threshold->callback([&] { action = [&] { return cmd_oracle_threshold(ctx, path, caps); }; });

  std::size_t k = 2;
  auto* asummable = oracle->add_subcommand("asummable", "k-asummability search");
  asummable->add_option("-k,--k", k, "Number of sets per side")->required()->check(
      CLI::Range(std::size_t{2}, std::size_t{64}));
  asummable->add_option("file", path)->required();
  std::optional<std::size_t> asummable_cap;
  asummable->add_option("--cap", asummable_cap, "Vertex cap");
  asummable->callback([&] {
    action = [&] {
      if (asummable_cap) caps.asummable_k2 = caps.asummable_k3 = caps.asummable_large_k = *asummable_cap;
      return cmd_oracle_asummable(ctx, path, k, caps);
    };
  });

  std::size_t n = 0;
  std::string filter = "none";
  auto* enumerate = oracle->add_subcommand("enumerate", "All Sperner hypergraphs on n vertices");
  enumerate->add_option("-n,--n", n, "Vertex count")->required();
  enumerate->add_option("--filter", filter, "one-sperner or reduced")
      ->check(CLI::IsMember({"none", "one-sperner", "reduced"}));
  enumerate->callback([&] { action = [&] { return cmd_oracle_enumerate(ctx, n, filter, caps); }; });

  auto* graph = app.add_subcommand("graph", "Threshold graph tools");
  graph->require_subcommand(1);
  auto* graph_check = graph->add_subcommand("check", "Four-way threshold report");
  graph_check->add_option("file", path)->required();
  graph_check->callback([&] { action = [&] { return cmd_graph_check(ctx, path, caps); }; });
  auto* cliques = graph->add_subcommand("cliques", "Clique hypergraph in HG form");
  cliques->add_option("file", path)->required();
  cliques->callback([&] { action = [&] { return cmd_graph_cliques(ctx, path); }; });

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Named and random 1-Sperner families");
  generate->require_subcommand(1);
  for (const char* family : {"star", "antistar"}) {
    auto* sub = generate->add_subcommand(family, std::string("r-") + family);
    sub->add_option("--v", gen_args.v, "Vertex list (default X then Y)")->delimiter(',');
    sub->add_option("--x", gen_args.x, "X, comma separated")->delimiter(',');
    sub->add_option("--y", gen_args.y, "Y, comma separated")->delimiter(',')->required();
    sub->callback([&, family] {
      action = [&, family] { return cmd_generate(ctx, family, gen_args); };
    });
  }
  auto* extremal = generate->add_subcommand("extremal", "Extremal family H_k");
  extremal->add_option("--k", gen_args.k, "k >= 2")->required();
  extremal->callback([&] { action = [&] { return cmd_generate(ctx, "extremal", gen_args); }; });
  auto* random = generate->add_subcommand("random", "Random safe gluing tree");
  random->add_option("--n", gen_args.n, "Vertex count")->required();
  random->add_option("--seed", gen_args.seed, "Seed");
  random->callback([&] { action = [&] { return cmd_generate(ctx, "random", gen_args); }; });

  std::size_t sweep_cap = 5;
  auto* verify_all = app.add_subcommand("verify-theorems", "Run every invariant sweep");
  verify_all->add_option("-n,--n", sweep_cap, "Instance size cap");
  verify_all->callback([&] { action = [&] { return cmd_verify(ctx, sweep_cap); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sperner::cli
