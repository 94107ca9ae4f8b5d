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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "sperner/gen.h"
#include "sperner/io.h"
#include "sperner_cli/cli.h"

namespace sperner::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char kH2[] = "HG 1\nV v1 v2\nE v1\nE v2\n";
const char kC4Cliques[] = "HG 1\nV a b c d\nE a b\nE a d\nE b c\nE c d\n";
const char kC4[] = "GR 1\nV a b c d\nE a b\nE b c\nE c d\nE d a\n";
const char kK4Edges[] = "HG 1\nV 1 2 3 4\nE 1 2\nE 1 3\nE 1 4\nE 2 3\nE 2 4\nE 3 4\n";

TEST(CliTest, CheckH2) {
  const Outcome o = Invoke({"check", "-"}, kH2);
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "sperner true\ndually_sperner true\none_sperner true\nconformal true\n");
}

TEST(CliTest, CheckReportsWitness) {
  const Outcome o = Invoke({"check", "-"}, kK4Edges);
  EXPECT_EQ(o.code, kPropertyFails);
  EXPECT_NE(o.out.find("one_sperner false"), std::string::npos);
  EXPECT_NE(o.out.find("witness_edge"), std::string::npos);
}

TEST(CliTest, GenerateExtremalPipesIntoCheck) {
  const Outcome gen = Invoke({"generate", "extremal", "--k", "3"});
  ASSERT_EQ(gen.code, kOk);
  EXPECT_EQ(parse_hg(gen.out), extremal_family(3));
  const Outcome check = Invoke({"check", "-"}, gen.out);
  EXPECT_EQ(check.code, kOk);
  EXPECT_NE(check.out.find("one_sperner true"), std::string::npos);
}

TEST(CliTest, Decompose) {
  const Outcome o = Invoke({"decompose", "-"}, kH2);
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "tree (v1 [e] (v2 [e] [0]))\nnode v1 safe\nnode v2 safe\n");
}

TEST(CliTest, WeightsVerify) {
  const Outcome o = Invoke({"weights", "--verify", "-"}, kH2);
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "w v1 1\nw v2 1\nt 1\nverified\n");
  const Outcome e = Invoke({"equalize", "--verify", "-"}, kH2);
  EXPECT_EQ(e.code, kOk);
  EXPECT_EQ(e.out, o.out);
}

TEST(CliTest, WeightsCapRefusal) {
  const Outcome o = Invoke({"weights", "--verify", "--cap", "3", "-"}, format_hg(extremal_family(3)));
  EXPECT_EQ(o.code, kCapRefused);
}

TEST(CliTest, Rank) {
  const Outcome o = Invoke({"rank", "-"}, kK4Edges);
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "rank 4\nedges 6\nvertices 4\n");
}

TEST(CliTest, OracleThreshold) {
  const Outcome yes = Invoke({"oracle", "threshold", "-"}, kK4Edges);
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.out.rfind("threshold true\n", 0), 0u);
  EXPECT_NE(yes.out.find("w 1 "), std::string::npos);
  EXPECT_NE(yes.out.find("/"), std::string::npos);

  const Outcome no = Invoke({"oracle", "threshold", "-"}, kC4Cliques);
  EXPECT_EQ(no.code, kPropertyFails);
  EXPECT_EQ(no.out.rfind("threshold false\n", 0), 0u);
  EXPECT_NE(no.out.find("constraint "), std::string::npos);
}

TEST(CliTest, OracleAsummable) {
  const Outcome o = Invoke({"oracle", "asummable", "-k", "2", "-"}, kC4Cliques);
  EXPECT_EQ(o.code, kPropertyFails);
  EXPECT_EQ(o.out, "asummable false\nk 2\nA a c\nA b d\nB a b\nB c d\n");
  EXPECT_EQ(Invoke({"oracle", "asummable", "-k", "2", "-"}, kH2).code, kOk);
}

TEST(CliTest, OracleEnumerate) {
  const Outcome o = Invoke({"oracle", "enumerate", "-n", "2"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(parse_hg_stream(o.out).size(), 6u);
  const Outcome all = Invoke({"oracle", "enumerate", "-n", "3", "--filter", "one-sperner"});
  for (const Hypergraph& h : parse_hg_stream(all.out)) EXPECT_TRUE(is_one_sperner(h));
  EXPECT_EQ(Invoke({"oracle", "enumerate", "-n", "7"}).code, kCapRefused);
}

TEST(CliTest, GraphCheckAndCliques) {
  const Outcome o = Invoke({"graph", "check", "-"}, kC4);
  EXPECT_EQ(o.code, kPropertyFails);
  EXPECT_NE(o.out.find("threshold_graph false"), std::string::npos);
  EXPECT_NE(o.out.find("agree true"), std::string::npos);
  EXPECT_NE(o.out.find("forbidden C4 a b c d"), std::string::npos);

  const Outcome k = Invoke({"graph", "check", "-"}, "GR 1\nV a b c\nE a b\nE b c\nE a c\n");
  EXPECT_EQ(k.code, kOk);

  const Outcome c = Invoke({"graph", "cliques", "-"}, kC4);
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out, kC4Cliques);
}

TEST(CliTest, GenerateFamilies) {
  const Outcome s = Invoke({"generate", "star", "--x", "x", "--y", "y1,y2"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_EQ(s.out, "HG 1\nV x y1 y2\nE x y1\nE x y2\n");
  const Outcome a = Invoke({"generate", "antistar", "--y", "1,2,3"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(parse_hg(a.out).num_edges(), 3u);
  const Outcome r = Invoke({"generate", "random", "--n", "10", "--seed", "7"});
  EXPECT_EQ(parse_hg(r.out), random_one_sperner(10, 7));
  EXPECT_EQ(Invoke({"generate", "star", "--x", "a", "--y", "a"}).code, kUsage);
}

TEST(CliTest, ErrorsAndExitCodes) {
  const Outcome parse = Invoke({"check", "-"}, "HG 1\nV a\nE b\n");
  EXPECT_EQ(parse.code, kUsage);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos);
  EXPECT_EQ(Invoke({}).code, kUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Invoke({"check", "/nonexistent/file.hg"}).code, kUsage);
  EXPECT_EQ(Invoke({"decompose", "-"}, kK4Edges).code, kPropertyFails);
  EXPECT_EQ(Invoke({"generate", "extremal", "--k", "20"}).code, kCapRefused);
  EXPECT_EQ(Invoke({"--help"}).code, kOk);
}

TEST(CliTest, JsonCarriesSameContent) {
  const Outcome plain = Invoke({"check", "-"}, kH2);
  const Outcome js = Invoke({"check", "--json", "-"}, kH2);
  EXPECT_EQ(js.code, plain.code);
  const auto record = nlohmann::json::parse(js.out);
  EXPECT_EQ(record["sperner"], true);
  EXPECT_EQ(record["one_sperner"], true);
  EXPECT_EQ(record["conformal"], true);

  const Outcome w = Invoke({"--json", "weights", "--verify", "-"}, kH2);
  const auto wr = nlohmann::json::parse(w.out);
  EXPECT_EQ(wr["t"], "1");
  EXPECT_EQ(wr["verified"], true);
  ASSERT_EQ(wr["weights"].size(), 2u);
  EXPECT_EQ(wr["weights"][0]["vertex"], "v1");

  const Outcome a = Invoke({"oracle", "asummable", "--json", "-k", "2", "-"}, kC4Cliques);
  const auto ar = nlohmann::json::parse(a.out);
  EXPECT_EQ(ar["asummable"], false);
  EXPECT_EQ(ar["independent"], nlohmann::json::array({nlohmann::json::array({"a", "c"}), nlohmann::json::array({"b", "d"})}));
  EXPECT_EQ(ar["dependent"], nlohmann::json::array({nlohmann::json::array({"a", "b"}), nlohmann::json::array({"c", "d"})}));
}

TEST(CliTest, JsonDocumentsPerLine) {
  const Outcome o = Invoke({"--json", "oracle", "enumerate", "-n", "1"});
  std::istringstream lines(o.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto doc = nlohmann::json::parse(line);
    EXPECT_TRUE(doc.contains("vertices"));
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(CliTest, VerifyTheoremsSmall) {
  const Outcome o = Invoke({"verify-theorems", "-n", "4"});
  EXPECT_EQ(o.code, kOk) << o.out;
  EXPECT_NE(o.out.find("summary "), std::string::npos);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace sperner::cli
