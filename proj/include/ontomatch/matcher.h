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

#ifndef ONTOMATCH_MATCHER_H_
#define ONTOMATCH_MATCHER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontomatch/iri.h"
#include "ontomatch/labels.h"
#include "ontomatch/lexicon.h"
#include "ontomatch/ontology.h"

namespace ontomatch {

inline constexpr double kDefaultAlpha = 0.8;
inline constexpr double kDefaultSynonymScore = 0.9;

struct MatchConfig {
  double alpha = kDefaultAlpha;
  double synonym_score = kDefaultSynonymScore;
  EntityScope scope = EntityScope::kClassesOnly;
  // Keep only a greedy 1:1 subset of the thresholded pairs.
  bool one_to_one = false;
  // Threads used for the score matrix; 0 picks hardware concurrency. The
  // result does not depend on this value.
  std::size_t workers = 0;

  // Throws std::invalid_argument when alpha or synonym_score is outside
  // [0, 1] or not a number.
  void Validate() const;
};

// Row-major n x m grid of pair scores.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  double& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  friend bool operator==(const SimilarityMatrix&,
                         const SimilarityMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

struct Correspondence {
  Iri source;
  Iri target;
  double score = 0.0;

  // Only equivalence is produced.
  static constexpr std::string_view relation() { return "="; }

  friend bool operator==(const Correspondence&,
                         const Correspondence&) = default;
};

// Orders by descending score, then source IRI, then target IRI.
bool CorrespondenceBefore(const Correspondence& a, const Correspondence& b);

struct Alignment {
  std::string source_ontology;
  std::string target_ontology;
  double alpha = kDefaultAlpha;
  std::vector<Correspondence> correspondences;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

// Synonym evidence for two normalized token lists: 1.0 when the joined forms
// are equal; cfg.synonym_score when the joined forms share a synset or when
// the tokens pair up one-to-one into equal or synonymous tokens; nullopt
// when there is no evidence.
std::optional<double> SynonymScore(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b,
                                   const SynonymLexicon& lexicon,
                                   const MatchConfig& config);

// Average of synonym evidence and Levenshtein similarity over the joined
// tokens. Without synonym evidence the Levenshtein similarity stands alone.
double PairScore(const LabelRecord& a, const LabelRecord& b,
                 const SynonymLexicon& lexicon, const MatchConfig& config);

// Builds the alignment from a finished score matrix: every cell >= alpha,
// sorted, and optionally reduced to a greedy 1:1 subset.
Alignment Threshold(const SimilarityMatrix& matrix,
                    const std::vector<LabelRecord>& source,
                    const std::vector<LabelRecord>& target,
                    const MatchConfig& config);

// Keeps the first correspondence for each source and each target in the
// given order.
std::vector<Correspondence> GreedyOneToOne(
    const std::vector<Correspondence>& sorted);

struct MatchResult {
  std::vector<LabelRecord> source_labels;
  std::vector<LabelRecord> target_labels;
  SimilarityMatrix matrix;
  Alignment alignment;
};

// Scores every in-scope source entity against every in-scope target entity
// and keeps the pairs scoring at least alpha. Many-to-many results are kept
// unless config.one_to_one is set.
//
// Throws EmptyOntology when either side has no in-scope entities, and
// std::invalid_argument for an invalid config.
MatchResult Match(const Ontology& source, const Ontology& target,
                  const SynonymLexicon& lexicon, const MatchConfig& config);

// Same as Match over pre-extracted label lists.
MatchResult MatchLabels(std::vector<LabelRecord> source,
                        std::vector<LabelRecord> target,
                        const SynonymLexicon& lexicon,
                        const MatchConfig& config);

}  // namespace ontomatch

#endif  // ONTOMATCH_MATCHER_H_
