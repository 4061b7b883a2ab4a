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

namespace ontomatch {

EvaluationReport Evaluate(const std::set<IriPair>& produced,
                          const ReferenceAlignment& reference) {
  EvaluationReport report;
  report.produced = produced.size();
  report.expected = reference.pairs.size();
  for (const IriPair& pair : produced) {
    if (reference.pairs.contains(pair)) ++report.true_positives;
  }
  const auto tp = static_cast<double>(report.true_positives);
  if (report.produced == 0) {
    report.precision = report.expected == 0 ? 1.0 : 0.0;
  } else {
    report.precision = tp / static_cast<double>(report.produced);
  }
  report.recall = report.expected == 0
                      ? 1.0
                      : tp / static_cast<double>(report.expected);
  const double sum = report.precision + report.recall;
  report.f_measure =
      sum == 0.0 ? 0.0 : 2.0 * report.precision * report.recall / sum;
  return report;
}

EvaluationReport Evaluate(const Alignment& produced,
                          const ReferenceAlignment& reference) {
  std::set<IriPair> pairs;
  for (const Correspondence& c : produced.correspondences) {
    pairs.emplace(c.source.str(), c.target.str());
  }
  return Evaluate(pairs, reference);
}

}  // namespace ontomatch
