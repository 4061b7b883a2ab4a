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

#include "ontomatch/evaluation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>

namespace ontomatch {
namespace {

ReferenceAlignment Ref(std::set<IriPair> pairs) { return {std::move(pairs)}; }

TEST(EvaluateTest, PerfectAlignment) {
  const std::set<IriPair> pairs = {{"a", "a'"}, {"b", "b'"}};
  const auto r = Evaluate(pairs, Ref(pairs));
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f_measure, 1.0);
  EXPECT_EQ(r.true_positives, 2u);
}

TEST(EvaluateTest, HalfOverlap) {
  const auto r = Evaluate(std::set<IriPair>{{"a", "a'"}, {"b", "x"}}, Ref({{"a", "a'"}, {"c", "c'"}}));
  EXPECT_EQ(r.precision, 0.5);
  EXPECT_EQ(r.recall, 0.5);
  EXPECT_EQ(r.f_measure, 0.5);
}

TEST(EvaluateTest, DegenerateCases) {
  auto r = Evaluate(std::set<IriPair>{}, Ref({{"a", "a'"}}));
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f_measure, 0.0);

  r = Evaluate(std::set<IriPair>{}, Ref({}));
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f_measure, 1.0);

  r = Evaluate(std::set<IriPair>{{"a", "b"}}, Ref({}));
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f_measure, 0.0);
}

TEST(EvaluateTest, AlignmentIgnoresScores) {
  Alignment alignment;
  alignment.correspondences = {
      {Iri("http://s/a"), Iri("http://t/a"), 0.81},
      {Iri("http://s/b"), Iri("http://t/x"), 1.0}};
  const auto r = Evaluate(alignment, Ref({{"http://s/a", "http://t/a"}}));
  EXPECT_EQ(r.true_positives, 1u);
  EXPECT_EQ(r.produced, 2u);
  EXPECT_EQ(r.expected, 1u);
  EXPECT_EQ(r.precision, 0.5);
  EXPECT_EQ(r.recall, 1.0);
}

std::set<IriPair> RandomPairs(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 12), id(0, 5);
  std::set<IriPair> out;
  for (int n = count(rng); n > 0; --n) {
    out.emplace("s" + std::to_string(id(rng)), "t" + std::to_string(id(rng)));
  }
  return out;
}

TEST(EvaluatePropertyTest, Invariants) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto produced = RandomPairs(rng);
    const auto reference = RandomPairs(rng);
    const auto r = Evaluate(produced, Ref(reference));
    EXPECT_GE(r.f_measure, 0.0);
    if (r.f_measure > 0.0) {
      // A harmonic mean lies between its two arguments.
      EXPECT_GE(r.f_measure, std::min(r.precision, r.recall) - 1e-15);
      EXPECT_LE(r.f_measure, std::max(r.precision, r.recall) + 1e-15);
      EXPECT_LE(std::max(r.precision, r.recall), 1.0);
      EXPECT_NEAR(r.f_measure,
                  2 * r.precision * r.recall / (r.precision + r.recall), 1e-12);
    }
    EXPECT_EQ(r.f_measure == 1.0, r.precision == 1.0 && r.recall == 1.0);

    // Adding a correct pair never lowers recall; adding a wrong one never
    // raises precision.
    std::vector<IriPair> missing;
    std::set_difference(reference.begin(), reference.end(), produced.begin(),
                        produced.end(), std::back_inserter(missing));
    if (!missing.empty()) {
      auto more = produced;
      more.insert(missing.front());
      EXPECT_GE(Evaluate(more, Ref(reference)).recall, r.recall);
    }
    auto wrong = produced;
    if (wrong.emplace("s-wrong", "t-wrong").second) {
      EXPECT_LE(Evaluate(wrong, Ref(reference)).precision, r.precision);
    }
  }
}

}  // namespace
}  // namespace ontomatch
