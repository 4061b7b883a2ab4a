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

#include "ontomatch/lexicon.h"

#include <gtest/gtest.h>

#include <sstream>

#include "ontomatch/errors.h"

namespace ontomatch {
namespace {

SynonymLexicon FromText(const std::string& text) {
  std::istringstream in(text);
  return SynonymLexicon::Read(in);
}

TEST(SynonymLexiconTest, ReadsSynsetsAndSkipsComments) {
  const auto lex = FromText(
      "# banking terms\n"
      "loan, credit, lending\n"
      "\n"
      "   # indented comment\n"
      "Deposit ,  SAVINGS \n");
  ASSERT_EQ(lex.synsets().size(), 2u);
  EXPECT_EQ(lex.synsets()[0], (std::set<std::string>{"credit", "lending", "loan"}));
  EXPECT_TRUE(lex.AreSynonyms("loan", "credit"));
  EXPECT_TRUE(lex.AreSynonyms("deposit", "savings"));
  EXPECT_FALSE(lex.AreSynonyms("loan", "deposit"));
  EXPECT_FALSE(lex.AreSynonyms("loan", "unknown"));
}

TEST(SynonymLexiconTest, TermsAreNormalized) {
  const auto lex = FromText("Loan_Repayment, debt   service\n");
  EXPECT_TRUE(lex.Contains("loan repayment"));
  EXPECT_TRUE(lex.Contains("debt service"));
  EXPECT_TRUE(lex.AreSynonyms("debt service", "loan repayment"));
}

TEST(SynonymLexiconTest, Symmetric) {
  const auto lex = FromText("a, b\nb, c\n");
  for (const char* x : {"a", "b", "c", "d"}) {
    for (const char* y : {"a", "b", "c", "d"}) {
      EXPECT_EQ(lex.AreSynonyms(x, y), lex.AreSynonyms(y, x));
    }
  }
  // Not transitive across synsets.
  EXPECT_FALSE(lex.AreSynonyms("a", "c"));
}

TEST(SynonymLexiconTest, EmptyTermsAreDropped) {
  const auto lex = FromText(",,\n , loan ,\n");
  ASSERT_EQ(lex.synsets().size(), 1u);
  EXPECT_EQ(lex.synsets()[0].size(), 1u);
}

TEST(SynonymLexiconTest, InvalidUtf8IsRejected) {
  try {
    FromText("loan, credit\n\xFF\xFE\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace ontomatch
