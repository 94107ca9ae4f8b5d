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

#ifndef SPERNER_IO_H_
#define SPERNER_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "sperner/graph.h"
#include "sperner/hypergraph.h"

namespace sperner {

// HG text format, one record per line, '#' to end of line is a comment:
//
//   HG 1
//   V a b c        (bare "V" means no vertices)
//   E a b          (bare "E" is the empty edge)
//
// No E line means E = {}; a single bare E line means E = {{}}.
// Malformed input raises ParseError carrying the 1-based line number.
Hypergraph parse_hg(std::string_view text);
// Several concatenated HG documents, each opened by its own header.
std::vector<Hypergraph> parse_hg_stream(std::string_view text);
std::string format_hg(const Hypergraph& h);

// GR text format: "GR 1", a V line, then "E u v" lines with two distinct
// labels.
Graph parse_gr(std::string_view text);
std::string format_gr(const Graph& g);

}  // namespace sperner

#endif  // SPERNER_IO_H_
