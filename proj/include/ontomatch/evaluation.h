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

#ifndef ONTOMATCH_EVALUATION_H_
#define ONTOMATCH_EVALUATION_H_

#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "ontomatch/matcher.h"

namespace ontomatch {

// (source IRI, target IRI); scores and relations are ignored.
using IriPair = std::pair<std::string, std::string>;

struct ReferenceAlignment {
  std::set<IriPair> pairs;
};

struct EvaluationReport {
  std::size_t true_positives = 0;
  std::size_t produced = 0;
  std::size_t expected = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// Precision, recall and their harmonic mean over exact IRI pairs.
//
// Empty cases: with nothing produced, precision is 1 if nothing was
// expected and 0 otherwise; with nothing expected, recall is 1. F-measure
// is 0 when precision and recall are both 0.
EvaluationReport Evaluate(const std::set<IriPair>& produced,
                          const ReferenceAlignment& reference);
EvaluationReport Evaluate(const Alignment& produced,
                          const ReferenceAlignment& reference);

}  // namespace ontomatch

#endif  // ONTOMATCH_EVALUATION_H_
