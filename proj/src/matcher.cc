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

#include "ontomatch/matcher.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/levenshtein.h"
#include "ontomatch/utf8.h"

namespace ontomatch {
namespace {

// Kuhn's augmenting-path bipartite matching; token lists are short.
bool HasPerfectMatching(const std::vector<std::vector<bool>>& edges) {
  const std::size_t n = edges.size();
  std::vector<std::size_t> owner(n, n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t left, std::vector<bool>& visited) {
        for (std::size_t right = 0; right < n; ++right) {
          if (!edges[left][right] || visited[right]) continue;
          visited[right] = true;
          if (owner[right] == n || augment(owner[right], visited)) {
            owner[right] = left;
            return true;
          }
        }
        return false;
      };
  for (std::size_t left = 0; left < n; ++left) {
    std::vector<bool> visited(n, false);
    if (!augment(left, visited)) return false;
  }
  return true;
}

std::optional<double> SynonymEvidence(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::string& joined_a,
                                      const std::string& joined_b,
                                      const SynonymLexicon& lexicon,
                                      const MatchConfig& config) {
  if (joined_a == joined_b) return 1.0;
  if (lexicon.AreSynonyms(joined_a, joined_b)) return config.synonym_score;
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  std::vector<std::vector<bool>> edges(a.size(),
                                       std::vector<bool>(b.size(), false));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      edges[i][j] = a[i] == b[j] || lexicon.AreSynonyms(a[i], b[j]);
    }
  }
  if (HasPerfectMatching(edges)) return config.synonym_score;
  return std::nullopt;
}

double Combine(std::optional<double> synonym, double levenshtein) {
  return synonym ? (*synonym + levenshtein) / 2.0 : levenshtein;
}

// Per-record data reused across a whole matrix row or column.
struct Prepared {
  std::string joined;
  std::u32string decoded;
};

std::vector<Prepared> Prepare(const std::vector<LabelRecord>& records) {
  std::vector<Prepared> prepared;
  prepared.reserve(records.size());
  for (const LabelRecord& record : records) {
    std::string joined = JoinTokens(record.tokens);
    std::u32string decoded = utf8::Decode(joined);
    prepared.push_back({std::move(joined), std::move(decoded)});
  }
  return prepared;
}

}  // namespace

void MatchConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be within [0, 1]");
  }
  if (!(synonym_score >= 0.0 && synonym_score <= 1.0)) {
    throw std::invalid_argument("synonym score must be within [0, 1]");
  }
}

bool CorrespondenceBefore(const Correspondence& a, const Correspondence& b) {
  if (a.score != b.score) return a.score > b.score;
  return std::tie(a.source, a.target) < std::tie(b.source, b.target);
}

std::optional<double> SynonymScore(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b,
                                   const SynonymLexicon& lexicon,
                                   const MatchConfig& config) {
  return SynonymEvidence(a, b, JoinTokens(a), JoinTokens(b), lexicon, config);
}

double PairScore(const LabelRecord& a, const LabelRecord& b,
                 const SynonymLexicon& lexicon, const MatchConfig& config) {
  const std::string joined_a = JoinTokens(a.tokens);
  const std::string joined_b = JoinTokens(b.tokens);
  return Combine(SynonymEvidence(a.tokens, b.tokens, joined_a, joined_b,
                                 lexicon, config),
                 LevenshteinSimilarity(joined_a, joined_b));
}

std::vector<Correspondence> GreedyOneToOne(
    const std::vector<Correspondence>& sorted) {
  std::set<Iri> used_sources;
  std::set<Iri> used_targets;
  std::vector<Correspondence> kept;
  for (const Correspondence& c : sorted) {
    if (used_sources.contains(c.source) || used_targets.contains(c.target)) {
      continue;
    }
    used_sources.insert(c.source);
    used_targets.insert(c.target);
    kept.push_back(c);
  }
  return kept;
}

Alignment Threshold(const SimilarityMatrix& matrix,
                    const std::vector<LabelRecord>& source,
                    const std::vector<LabelRecord>& target,
                    const MatchConfig& config) {
  Alignment alignment;
  alignment.alpha = config.alpha;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const double score = matrix.at(i, j);
      if (score >= config.alpha) {
        alignment.correspondences.push_back(
            {source[i].iri, target[j].iri, score});
      }
    }
  }
  auto& list = alignment.correspondences;
  std::sort(list.begin(), list.end(), CorrespondenceBefore);
  // Repeated pairs keep their best (first) occurrence.
  std::set<std::pair<Iri, Iri>> seen;
  std::erase_if(list, [&](const Correspondence& c) {
    return !seen.emplace(c.source, c.target).second;
  });
  if (config.one_to_one) list = GreedyOneToOne(list);
  return alignment;
}

MatchResult MatchLabels(std::vector<LabelRecord> source,
                        std::vector<LabelRecord> target,
                        const SynonymLexicon& lexicon,
                        const MatchConfig& config) {
  config.Validate();
  if (source.empty()) {
    throw EmptyOntology("source ontology has no in-scope entities");
  }
  if (target.empty()) {
    throw EmptyOntology("target ontology has no in-scope entities");
  }
  const std::vector<Prepared> prepared_source = Prepare(source);
  const std::vector<Prepared> prepared_target = Prepare(target);
  SimilarityMatrix matrix(source.size(), target.size());

  const auto fill_row = [&](std::size_t i) {
    const LabelRecord& a = source[i];
    const Prepared& pa = prepared_source[i];
    for (std::size_t j = 0; j < target.size(); ++j) {
      const Prepared& pb = prepared_target[j];
      const auto synonym = SynonymEvidence(a.tokens, target[j].tokens,
                                           pa.joined, pb.joined, lexicon,
                                           config);
      matrix.at(i, j) =
          Combine(synonym, LevenshteinSimilarity(pa.decoded, pb.decoded));
    }
  };

  std::size_t workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, source.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < source.size(); ++i) fill_row(i);
  } else {
    // Rows are dealt round-robin; each cell is written by exactly one thread.
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < source.size(); i += workers) fill_row(i);
      });
    }
  }

  Alignment alignment = Threshold(matrix, source, target, config);
  return {std::move(source), std::move(target), std::move(matrix),
          std::move(alignment)};
}

MatchResult Match(const Ontology& source, const Ontology& target,
                  const SynonymLexicon& lexicon, const MatchConfig& config) {
  config.Validate();
  MatchResult result =
      MatchLabels(ExtractLabels(source, config.scope),
                  ExtractLabels(target, config.scope), lexicon, config);
  if (source.ontology_iri()) {
    result.alignment.source_ontology = source.ontology_iri()->str();
  }
  if (target.ontology_iri()) {
    result.alignment.target_ontology = target.ontology_iri()->str();
  }
  return result;
}

}  // namespace ontomatch
