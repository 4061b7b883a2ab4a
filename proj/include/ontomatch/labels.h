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

#ifndef ONTOMATCH_LABELS_H_
#define ONTOMATCH_LABELS_H_

#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/iri.h"
#include "ontomatch/ontology.h"

namespace ontomatch {

enum class EntityScope {
  kClassesOnly,
  // Classes, object properties and data properties.
  kClassesAndProperties,
};

struct LabelRecord {
  Iri iri;
  std::string display_label;
  // Lowercase, whitespace-free; non-empty whenever display_label has any
  // non-separator character.
  std::vector<std::string> tokens;

  friend bool operator==(const LabelRecord&, const LabelRecord&) = default;
};

// Local name of an IRI: the text after the last '#', else after the last
// '/'. Falls back to the whole IRI when that text would be empty.
std::string SplitIri(std::string_view iri);

// Splits on '_', '-', whitespace and lower-to-upper case transitions, then
// lowercases. "hasBankingRelationship" -> {"has", "banking", "relationship"}.
std::vector<std::string> NormalizeLabel(std::string_view raw);

// Tokens joined by single spaces; the form both matchers compare.
std::string JoinTokens(const std::vector<std::string>& tokens);

// Picks the label shown for an entity: the first "en" label, else the first
// untagged one, else the lexicographically smallest. Falls back to
// SplitIri when the entity has no labels.
std::string DisplayLabel(const Entity& entity);

// One record per in-scope entity, ordered by IRI.
std::vector<LabelRecord> ExtractLabels(const Ontology& ontology,
                                       EntityScope scope);

}  // namespace ontomatch

#endif  // ONTOMATCH_LABELS_H_
