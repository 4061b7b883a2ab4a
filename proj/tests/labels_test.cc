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

#include "ontomatch/labels.h"

#include <gtest/gtest.h>

#include <random>

#include "ontomatch/ingest.h"
#include "ontomatch/utf8.h"
#include "test_support.h"

namespace ontomatch {
namespace {

using Tokens = std::vector<std::string>;

TEST(SplitIriTest, FragmentAndPathRules) {
  EXPECT_EQ(SplitIri("http://ex.org/onto#Private_Sector"), "Private_Sector");
  EXPECT_EQ(SplitIri("http://ex.org/onto/Loan_repayment"), "Loan_repayment");
  EXPECT_EQ(SplitIri("http://ex.org/a/b#c/d"), "c/d");
}

TEST(SplitIriTest, DegenerateFallsBackToWholeIri) {
  EXPECT_EQ(SplitIri("http://ex.org/onto#"), "http://ex.org/onto#");
  EXPECT_EQ(SplitIri("http://ex.org/onto/"), "http://ex.org/onto/");
  EXPECT_EQ(SplitIri("urn:isbn:123"), "urn:isbn:123");
}

TEST(NormalizeLabelTest, SpecExamples) {
  EXPECT_EQ(NormalizeLabel("Private_Sector"), (Tokens{"private", "sector"}));
  EXPECT_EQ(NormalizeLabel("hasBankingRelationship"),
            (Tokens{"has", "banking", "relationship"}));
  EXPECT_EQ(NormalizeLabel("NPA"), (Tokens{"npa"}));
}

TEST(NormalizeLabelTest, SeparatorsAndDigits) {
  EXPECT_EQ(NormalizeLabel("  Loan  repayment-plan__v2 "),
            (Tokens{"loan", "repayment", "plan", "v2"}));
  EXPECT_EQ(NormalizeLabel("covid19Cases"), (Tokens{"covid19cases"}));
  EXPECT_EQ(NormalizeLabel("Covid-19"), (Tokens{"covid", "19"}));
  EXPECT_EQ(NormalizeLabel("IndividualCurrentAccount"),
            (Tokens{"individual", "current", "account"}));
  EXPECT_EQ(NormalizeLabel("ETB"), (Tokens{"etb"}));
  EXPECT_TRUE(NormalizeLabel("").empty());
  EXPECT_TRUE(NormalizeLabel("_-_ \t").empty());
}

TEST(NormalizeLabelTest, UnicodeCaseAndSpace) {
  EXPECT_EQ(NormalizeLabel("ÉtatBancaire"), (Tokens{"état", "bancaire"}));
  EXPECT_EQ(NormalizeLabel("ΤράπεζαΔάνειο"), (Tokens{"τράπεζα", "δάνειο"}));
  EXPECT_EQ(NormalizeLabel("Банк Кредит"), (Tokens{"банк", "кредит"}));
}

TEST(NormalizeLabelTest, LoanRepaymentStylesAgree) {
  EXPECT_EQ(NormalizeLabel("Loan_repayment"), NormalizeLabel("LoanRepayment"));
}

// Tokens never contain whitespace or uppercase characters, and are
// non-empty whenever the label has a non-separator character.
TEST(NormalizeLabelTest, TokenInvariantsOnRandomInput) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::u32string raw = testing::RandomUnicode(rng, 30) + U"_-Aa";
    const std::string text = testing::EncodeUtf8(raw.substr(0, raw.size() - 4 + i % 5));
    const Tokens tokens = NormalizeLabel(text);
    bool has_content = false;
    for (const char32_t c : utf8::Decode(text)) {
      if (c != U'_' && c != U'-' && !utf8::IsWhitespace(c)) has_content = true;
    }
    EXPECT_EQ(!tokens.empty(), has_content) << text;
    for (const std::string& token : tokens) {
      ASSERT_FALSE(token.empty());
      for (const char32_t c : utf8::Decode(token)) {
        ASSERT_FALSE(utf8::IsWhitespace(c)) << text;
        ASSERT_FALSE(utf8::IsUpper(c)) << text;
      }
    }
  }
}

Ontology FromTurtle(const std::string& body) {
  return Parse({"@prefix : <http://ex.org/o#> .\n"
                "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
                "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n" +
                    body,
                FormatHint::kAuto})
      .ontology;
}

TEST(ExtractLabelsTest, LabeledAndFallback) {
  const Ontology onto = FromTurtle(R"(
:Bank a owl:Class ; rdfs:label "Bank"@en .
:Cooperative_Banks a owl:Class .
)");
  const auto records = ExtractLabels(onto, EntityScope::kClassesOnly);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].iri, Iri("http://ex.org/o#Bank"));
  EXPECT_EQ(records[0].display_label, "Bank");
  EXPECT_EQ(records[0].tokens, (Tokens{"bank"}));
  EXPECT_EQ(records[1].display_label, "Cooperative_Banks");
  EXPECT_EQ(records[1].tokens, (Tokens{"cooperative", "banks"}));
}

TEST(ExtractLabelsTest, LabelPreference) {
  const Ontology onto = FromTurtle(R"(
:A a owl:Class ; rdfs:label "Kredit"@de , "Credit"@en , "Plain" .
:B a owl:Class ; rdfs:label "Kredit"@de , "Plain" .
:C a owl:Class ; rdfs:label "Zeta"@de , "Alpha"@fr .
)");
  const auto records = ExtractLabels(onto, EntityScope::kClassesOnly);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].display_label, "Credit");
  EXPECT_EQ(records[1].display_label, "Plain");
  EXPECT_EQ(records[2].display_label, "Alpha");
}

TEST(ExtractLabelsTest, ScopeAndOrder) {
  const Ontology onto = FromTurtle(R"(
:z a owl:Class . :a a owl:Class .
:hasPart a owl:ObjectProperty . :weight a owl:DatatypeProperty .
:x a owl:NamedIndividual .
)");
  const auto classes = ExtractLabels(onto, EntityScope::kClassesOnly);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].display_label, "a");
  EXPECT_EQ(classes[1].display_label, "z");
  const auto all = ExtractLabels(onto, EntityScope::kClassesAndProperties);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const LabelRecord& x, const LabelRecord& y) {
                               return x.iri < y.iri;
                             }));
}

TEST(ExtractLabelsTest, OneRecordPerClass) {
  const Ontology onto =
      Parse({testing::ToTurtle(testing::CountsFixture(105, 94, 28, 43)),
             FormatHint::kAuto})
          .ontology;
  EXPECT_EQ(ExtractLabels(onto, EntityScope::kClassesOnly).size(), 105u);
}

TEST(ExtractLabelsTest, EmptyOntology) {
  EXPECT_TRUE(ExtractLabels(Ontology{}, EntityScope::kClassesOnly).empty());
}

}  // namespace
}  // namespace ontomatch
