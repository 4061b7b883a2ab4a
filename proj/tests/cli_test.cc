// Copyright 2026 The OntoMatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "test_support.h"

namespace ontomatch::cli {
namespace {

const std::string kFixtures = ONTOMATCH_FIXTURE_DIR;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Exec(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Every error path prints exactly one line that starts with "error: ".
void ExpectOneLineError(const RunResult& r, const std::string& kind) {
  EXPECT_EQ(r.err.rfind("error: " + kind + ": ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_TRUE(r.out.empty());
}

constexpr char kExpectedTsv[] =
    "source_iri\ttarget_iri\trelation\tscore\n"
    "http://example.org/banking#Bank\thttp://example.org/finance#Bank\t=\t1.0000\n"
    "http://example.org/banking#Loan_repayment\t"
    "http://example.org/finance#LoanRepayment\t=\t1.0000\n"
    "http://example.org/banking#Private_Sector\t"
    "http://example.org/finance#PrivateSector\t=\t1.0000\n"
    "http://example.org/banking#Bank\thttp://example.org/finance#Banks\t=\t0.8000\n";

TEST(CmdMatchTest, TsvOnStdout) {
  const auto r = Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"),
                       "--alpha", "0.8", "--synonyms", Fixture("synonyms.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, kExpectedTsv);
  EXPECT_EQ(r.err.rfind("manifest: ", 0), 0u);
}

TEST(CmdMatchTest, TurtleAndRdfXmlSourcesAgree) {
  const auto a = Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl")});
  const auto b = Exec({"match", Fixture("banking.ttl"), Fixture("finance.ttl")});
  EXPECT_EQ(a.out, b.out);
}

TEST(CmdMatchTest, IdentityMatchesEveryClass) {
  const auto r = Exec({"match", Fixture("finance.ttl"), Fixture("finance.ttl")});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* name :
       {"Bank", "Banks", "Credit", "LoanRepayment", "PrivateSector", "Savings"}) {
    const std::string iri = std::string("http://example.org/finance#") + name;
    EXPECT_NE(r.out.find(iri + "\t" + iri + "\t=\t1.0000\n"), std::string::npos)
        << name;
  }
}

TEST(CmdMatchTest, DeterministicAcrossWorkers) {
  const auto one = Exec({"match", Fixture("banking.ttl"), Fixture("finance.ttl"),
                         "--alpha", "0.2", "--workers", "1"});
  const auto many = Exec({"match", Fixture("banking.ttl"), Fixture("finance.ttl"),
                          "--alpha", "0.2", "--workers", "5"});
  EXPECT_EQ(one.out, many.out);
}

TEST(CmdMatchTest, JsonFormat) {
  const auto r = Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"),
                       "--format", "json", "--synonyms", Fixture("synonyms.txt")});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["source"], "http://example.org/banking");
  EXPECT_EQ(doc["target"], "http://example.org/finance");
  ASSERT_EQ(doc["correspondences"].size(), 4u);
  EXPECT_EQ(doc["correspondences"][3]["target"], "http://example.org/finance#Banks");
  EXPECT_EQ(doc["correspondences"][3]["relation"], "=");
  EXPECT_NE(r.out.find("\"score\": 0.8000"), std::string::npos);
}

TEST(CmdMatchTest, OneToOneAndScope) {
  auto r = Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"),
                 "--one-to-one"});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  r = Exec({"match", Fixture("banking.ttl"), Fixture("banking.ttl"), "--scope",
            "all"});
  EXPECT_NE(r.out.find("#hasBankingRelationship\t"), std::string::npos) << r.out;
}

TEST(CmdMatchTest, OutputFileAndManifest) {
  testing::TempDir dir;
  const auto lexicon = dir.Write("lex.txt", "abc");
  const auto output = dir.path() / "out.tsv";
  const auto r = Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"),
                       "--synonyms", lexicon.string(), "-o", output.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Slurp(output), kExpectedTsv);
  const auto manifest =
      nlohmann::json::parse(Slurp(output.string() + ".manifest.json"));
  EXPECT_EQ(manifest["command"], "match");
  EXPECT_EQ(manifest["alpha"], 0.8);
  EXPECT_EQ(manifest["correspondences"], 4);
  EXPECT_EQ(manifest["lexicon"]["sha256"],
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  ASSERT_EQ(manifest["inputs"].size(), 2u);
  EXPECT_EQ(manifest["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_FALSE(manifest["tool_version"].get<std::string>().empty());

  const auto explicit_path = dir.path() / "run.json";
  Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"), "--manifest",
        explicit_path.string()});
  EXPECT_EQ(nlohmann::json::parse(Slurp(explicit_path))["lexicon"], nullptr);
}

TEST(CmdMatchTest, BadFlagsExitThree) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"match", Fixture("banking.ttl"),
                                 Fixture("finance.ttl"), "--alpha", "1.5"},
        {"match", Fixture("banking.ttl"), Fixture("finance.ttl"), "--alpha", "-1"},
        {"match", Fixture("banking.ttl"), Fixture("finance.ttl"), "--alpha", "nan"},
        {"match", Fixture("banking.ttl"), Fixture("finance.ttl"), "--format", "xml"},
        {"match", Fixture("banking.ttl"), Fixture("finance.ttl"), "--bogus"},
        {"match", Fixture("banking.ttl")},
        {"frobnicate"},
        {}}) {
    const auto r = Exec(args);
    EXPECT_EQ(r.code, kExitUsage) << r.err;
    ExpectOneLineError(r, "usage");
  }
}

TEST(CmdMatchTest, ParseFailureExitTwoNamesFileAndLine) {
  testing::TempDir dir;
  const auto bad = dir.Write("bad.ttl",
                             "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
                             "<http://x/A> a owl:Class\n"
                             "<http://x/B> a owl:Class .\n");
  const auto r = Exec({"match", bad.string(), Fixture("finance.ttl")});
  EXPECT_EQ(r.code, kExitParse);
  ExpectOneLineError(r, "parse");
  EXPECT_NE(r.err.find(bad.string() + ":3:"), std::string::npos) << r.err;
}

TEST(CmdMatchTest, MissingFileExitTwo) {
  const auto r = Exec({"match", "/nonexistent/a.ttl", Fixture("finance.ttl")});
  EXPECT_EQ(r.code, kExitParse);
  ExpectOneLineError(r, "io");
}

TEST(CmdMatchTest, BadLexiconExitTwo) {
  testing::TempDir dir;
  const auto lex = dir.Write("lex.txt", "loan\xFF\n");
  const auto r = Exec({"match", Fixture("banking.ttl"), Fixture("finance.ttl"),
                       "--synonyms", lex.string()});
  EXPECT_EQ(r.code, kExitParse);
  ExpectOneLineError(r, "parse");
}

TEST(CmdMatchTest, EmptyScopeExitFour) {
  testing::TempDir dir;
  const auto props = dir.Write(
      "props.ttl",
      "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
      "<http://x/p> a owl:ObjectProperty .\n");
  const auto r = Exec({"match", props.string(), Fixture("finance.ttl")});
  EXPECT_EQ(r.code, kExitEmpty);
  ExpectOneLineError(r, "empty");
}

TEST(CmdEvalTest, Examples) {
  testing::TempDir dir;
  const auto a = dir.Write("a.tsv",
                           "source_iri\ttarget_iri\n"
                           "http://s/a\thttp://t/a\n"
                           "http://s/b\thttp://t/x\n");
  const auto b = dir.Write("b.tsv",
                           "source_iri\ttarget_iri\n"
                           "http://s/a\thttp://t/a\n"
                           "http://s/c\thttp://t/c\n");
  const auto c = dir.Write("c.tsv",
                           "source_iri\ttarget_iri\n"
                           "http://s/z\thttp://t/z\n");
  EXPECT_EQ(Exec({"eval", a.string(), a.string()}).out,
            "precision 1.000 recall 1.000 f 1.000\n");
  EXPECT_EQ(Exec({"eval", a.string(), c.string()}).out,
            "precision 0.000 recall 0.000 f 0.000\n");
  EXPECT_EQ(Exec({"eval", a.string(), b.string()}).out,
            "precision 0.500 recall 0.500 f 0.500\n");
}

TEST(CmdEvalTest, MatchOutputAgainstReference) {
  testing::TempDir dir;
  const auto output = dir.path() / "out.tsv";
  ASSERT_EQ(Exec({"match", Fixture("banking.owl"), Fixture("finance.ttl"), "-o",
                  output.string()})
                .code,
            kExitOk);
  // 3 of 4 produced pairs are in the 4-pair reference.
  const auto r = Exec({"eval", output.string(), Fixture("reference.tsv")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "precision 0.750 recall 0.750 f 0.750\n");
}

TEST(CmdEvalTest, MalformedExitTwo) {
  testing::TempDir dir;
  const auto bad = dir.Write("bad.tsv", "source_iri\ttarget_iri\nhttp://s/a\n");
  const auto r = Exec({"eval", bad.string(), Fixture("reference.tsv")});
  EXPECT_EQ(r.code, kExitParse);
  ExpectOneLineError(r, "parse");
  EXPECT_NE(r.err.find(":2:"), std::string::npos);
}

TEST(CmdMetricsTest, CodoShape) {
  testing::TempDir dir;
  const auto path = dir.Write(
      "codo.ttl", testing::ToTurtle(testing::CountsFixture(91, 0, 0, 50)));
  const auto r = Exec({"metrics", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Class count             91\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Attribute Richness      0.549\n"), std::string::npos);
}

TEST(CmdMetricsTest, RelationRichness) {
  testing::TempDir dir;
  const auto path = dir.Write(
      "ibo.ttl", testing::ToTurtle(testing::CountsFixture(105, 94, 28, 43)));
  const auto r = Exec({"metrics", path.string()});
  EXPECT_NE(r.out.find("Relation Richness       0.230\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Inheritance Richness    0.895\n"), std::string::npos);
}

TEST(CmdMetricsTest, RowOrder) {
  const auto r = Exec({"metrics", Fixture("banking.ttl")});
  const std::vector<std::string> rows = {
      "Axioms", "Logical axioms count", "Class count", "Object property count",
      "Data property count", "Attribute Richness", "Inheritance Richness",
      "Relation Richness"};
  std::size_t pos = 0;
  for (const auto& row : rows) {
    const std::size_t next = r.out.find("\n" + row + " ", pos);
    ASSERT_TRUE(next != std::string::npos || (pos == 0 && r.out.rfind(row, 0) == 0))
        << row;
    if (next != std::string::npos) pos = next + 1;
  }
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST(CmdMetricsTest, EmptyOntologyFlags) {
  testing::TempDir dir;
  const auto path =
      dir.Write("empty.ttl", "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n");
  const auto r = Exec({"metrics", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Class count             0\n"), std::string::npos);
  EXPECT_NE(r.out.find("Attribute Richness      0.000  (undefined: no classes)"),
            std::string::npos);
  EXPECT_NE(r.out.find("Relation Richness       0.000  (undefined:"),
            std::string::npos);
}

TEST(CmdMetricsTest, Json) {
  const auto r = Exec({"metrics", Fixture("banking.ttl"), "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["class_count"], 7);
  EXPECT_EQ(doc["axioms"], 24);
  EXPECT_EQ(doc["relation_richness"], 0.2);
  EXPECT_EQ(doc["no_classes"], false);
}

TEST(CmdMetricsTest, ParseFailure) {
  testing::TempDir dir;
  const auto path = dir.Write("x.owl", "<?xml version=\"1.0\"?>\n<rdf:RDF>\n");
  const auto r = Exec({"metrics", path.string()});
  EXPECT_EQ(r.code, kExitParse);
  ExpectOneLineError(r, "parse");
}

TEST(CmdLabelsTest, LabeledAndFallback) {
  testing::TempDir dir;
  const auto path = dir.Write(
      "l.ttl",
      "@prefix : <http://ex.org/o#> .\n"
      "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      ":B1 a owl:Class ; rdfs:label \"Bank\"@en .\n"
      ":Cooperative_Banks a owl:Class .\n");
  const auto r = Exec({"labels", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "http://ex.org/o#B1\tBank\tbank\n"
            "http://ex.org/o#Cooperative_Banks\tCooperative_Banks\tcooperative banks\n");
}

TEST(CmdLabelsTest, EmptyOntologyPrintsNothing) {
  testing::TempDir dir;
  const auto path =
      dir.Write("empty.ttl", "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n");
  const auto r = Exec({"labels", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, HelpAndVersion) {
  auto r = Exec({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("match"), std::string::npos);
  r = Exec({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
}  // namespace ontomatch::cli
