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

#include "ontomatch/levenshtein.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace ontomatch {
namespace {

using testing::EncodeUtf8;
using testing::OracleDistance;
using testing::RandomUnicode;

TEST(LevenshteinDistanceTest, Examples) {
  EXPECT_EQ(LevenshteinDistance("bank", "bank"), 0u);
  EXPECT_EQ(LevenshteinDistance("kitten", "sitting"), 3u);
  EXPECT_EQ(LevenshteinDistance("loan", "credit"), 6u);
  EXPECT_EQ(LevenshteinDistance("", "abcd"), 4u);
  EXPECT_EQ(LevenshteinDistance("abcd", ""), 4u);
  EXPECT_EQ(LevenshteinDistance("unclear", "nuclear"), 2u);
}

TEST(LevenshteinDistanceTest, ExamplesAgreeWithOracle) {
  EXPECT_EQ(OracleDistance(std::string("kitten"), std::string("sitting")), 3u);
  EXPECT_EQ(OracleDistance(std::string("loan"), std::string("credit")), 6u);
}

TEST(LevenshteinDistanceTest, CountsCodePointsNotBytes) {
  // One substitution of a two-byte character.
  EXPECT_EQ(LevenshteinDistance("café", "cafe"), 1u);
  EXPECT_EQ(LevenshteinDistance("中文", "中"), 1u);
  EXPECT_EQ(LevenshteinDistance("\U0001F600", ""), 1u);
}

TEST(LevenshteinSimilarityTest, Examples) {
  EXPECT_EQ(LevenshteinSimilarity("bank", "bank"), 1.0);
  EXPECT_EQ(LevenshteinSimilarity("bank", "banks"), 0.8);
  EXPECT_EQ(LevenshteinSimilarity("loan", "credit"), 0.0);
  EXPECT_EQ(LevenshteinSimilarity("", ""), 1.0);
  EXPECT_EQ(LevenshteinSimilarity("", "a"), 0.0);
}

TEST(LevenshteinPropertyTest, AgreesWithOracleOnRandomUnicode) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 500; ++i) {
    const std::u32string a = RandomUnicode(rng, 40);
    const std::u32string b = RandomUnicode(rng, 40);
    ASSERT_EQ(LevenshteinDistance(EncodeUtf8(a), EncodeUtf8(b)),
              OracleDistance(a, b));
  }
}

TEST(LevenshteinPropertyTest, MetricLaws) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::u32string a = RandomUnicode(rng, 15);
    const std::u32string b = RandomUnicode(rng, 15);
    const std::u32string c = RandomUnicode(rng, 15);
    const std::size_t ab = LevenshteinDistance(a, b);
    EXPECT_EQ(ab, LevenshteinDistance(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(LevenshteinDistance(a, c), ab + LevenshteinDistance(b, c));
    const double sim = LevenshteinSimilarity(a, b);
    EXPECT_GE(sim, 0.0);
    EXPECT_LE(sim, 1.0);
    EXPECT_EQ(sim, LevenshteinSimilarity(b, a));
  }
}

}  // namespace
}  // namespace ontomatch
