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

#include "sperner/io.h"

#include <sstream>

#include "sperner/error.h"

namespace sperner {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

VertexId parse_label(const std::string& token, std::size_t line) {
  if (!VertexId::is_valid(token)) throw ParseError(line, "invalid vertex label '" + token + "'");
  return VertexId(token);
}

void expect_header(const Line& line, std::string_view tag) {
  if (line.tokens.size() != 2 || line.tokens[0] != tag || line.tokens[1] != "1") {
    throw ParseError(line.number, "expected header '" + std::string(tag) + " 1'");
  }
}

// Parses one HG document starting at lines[pos]; advances pos past it.
Hypergraph parse_hg_document(const std::vector<Line>& lines, std::size_t& pos) {
  expect_header(lines[pos], "HG");
  ++pos;
  if (pos >= lines.size() || lines[pos].tokens[0] != "V") {
    throw ParseError(pos < lines.size() ? lines[pos].number : lines[pos - 1].number,
                     "expected 'V' record after header");
  }
  std::vector<VertexId> vertices;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 1; i < lines[pos].tokens.size(); ++i) {
    vertices.push_back(parse_label(lines[pos].tokens[i], lines[pos].number));
    if (!index.emplace(vertices.back().str(), vertices.size() - 1).second) {
      throw ParseError(lines[pos].number, "duplicate vertex '" + vertices.back().str() + "'");
    }
  }
  ++pos;
  std::vector<VertexSet> edges;
  std::vector<std::size_t> edge_lines;
  for (; pos < lines.size() && lines[pos].tokens[0] != "HG"; ++pos) {
    const Line& line = lines[pos];
    if (line.tokens[0] != "E") {
      throw ParseError(line.number, "unexpected record '" + line.tokens[0] + "'");
    }
    VertexSet e(vertices.size());
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      auto it = index.find(line.tokens[i]);
      if (it == index.end()) {
        throw ParseError(line.number, "unknown vertex '" + line.tokens[i] + "'");
      }
      if (e.contains(it->second)) {
        throw ParseError(line.number, "vertex '" + line.tokens[i] + "' repeated in edge");
      }
      e.insert(it->second);
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k] == e) {
        throw ParseError(line.number,
                         "duplicate edge (first seen on line " + std::to_string(edge_lines[k]) + ")");
      }
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line.number);
  }
  return Hypergraph::from_sets(std::move(vertices), std::move(edges));
}

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  std::size_t pos = 0;
  Hypergraph h = parse_hg_document(lines, pos);
  if (pos != lines.size()) throw ParseError(lines[pos].number, "trailing document");
  return h;
}

std::vector<Hypergraph> parse_hg_stream(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<Hypergraph> out;
  std::size_t pos = 0;
  while (pos < lines.size()) out.push_back(parse_hg_document(lines, pos));
  return out;
}

std::string format_hg(const Hypergraph& h) {
  std::string out = "HG 1\nV";
  for (const VertexId& v : h.vertices()) out += " " + v.str();
  out += "\n";
  for (const VertexSet& e : h.edges()) {
    out += "E";
    e.for_each([&](std::size_t i) { out += " " + h.vertices()[i].str(); });
    out += "\n";
  }
  return out;
}

Graph parse_gr(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  expect_header(lines[0], "GR");
  if (lines.size() < 2 || lines[1].tokens[0] != "V") {
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected 'V' record after header");
  }
  std::vector<VertexId> vertices;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 1; i < lines[1].tokens.size(); ++i) {
    vertices.push_back(parse_label(lines[1].tokens[i], lines[1].number));
    if (!index.emplace(vertices.back().str(), vertices.size() - 1).second) {
      throw ParseError(lines[1].number, "duplicate vertex '" + vertices.back().str() + "'");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<VertexSet> seen;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "E") {
      throw ParseError(line.number, "unexpected record '" + line.tokens[0] + "'");
    }
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "graph edge needs exactly two endpoints");
    }
    std::size_t ends[2];
    for (int i = 0; i < 2; ++i) {
      auto it = index.find(line.tokens[1 + i]);
      if (it == index.end()) {
        throw ParseError(line.number, "unknown vertex '" + line.tokens[1 + i] + "'");
      }
      ends[i] = it->second;
    }
    if (ends[0] == ends[1]) throw ParseError(line.number, "loops are not allowed");
    VertexSet key = VertexSet::of(vertices.size(), {ends[0], ends[1]});
    for (const VertexSet& s : seen) {
      if (s == key) throw ParseError(line.number, "duplicate edge");
    }
    seen.push_back(std::move(key));
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph::from_indices(std::move(vertices), edges);
}

std::string format_gr(const Graph& g) {
  std::string out = "GR 1\nV";
  for (const VertexId& v : g.vertices()) out += " " + v.str();
  out += "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "E " + g.vertices()[u].str() + " " + g.vertices()[v].str() + "\n";
  }
  return out;
}

}  // namespace sperner
