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

#include <algorithm>
#include <tuple>

#include "ontomatch/utf8.h"

namespace ontomatch {

std::string SplitIri(std::string_view iri) {
  std::size_t cut = iri.rfind('#');
  if (cut == std::string_view::npos) cut = iri.rfind('/');
  if (cut == std::string_view::npos || cut + 1 >= iri.size()) {
    return std::string(iri);
  }
  return std::string(iri.substr(cut + 1));
}

std::vector<std::string> NormalizeLabel(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  char32_t previous = 0;
  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (const char32_t c : utf8::Decode(raw)) {
    if (c == U'_' || c == U'-' || utf8::IsWhitespace(c)) {
      flush();
      previous = 0;
      continue;
    }
    if (utf8::IsUpper(c) && utf8::IsLower(previous)) flush();
    utf8::Append(utf8::ToLower(c), current);
    previous = c;
  }
  flush();
  return tokens;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const std::string& token : tokens) {
    if (!joined.empty()) joined.push_back(' ');
    joined += token;
  }
  return joined;
}

std::string DisplayLabel(const Entity& entity) {
  const auto& labels = entity.labels;
  if (labels.empty()) return SplitIri(entity.iri.str());
  for (const Label& label : labels) {
    if (label.language == "en") return label.text;
  }
  for (const Label& label : labels) {
    if (label.language.empty()) return label.text;
  }
  return std::min_element(labels.begin(), labels.end(),
                          [](const Label& a, const Label& b) {
                            return std::tie(a.text, a.language) <
                                   std::tie(b.text, b.language);
                          })
      ->text;
}

std::vector<LabelRecord> ExtractLabels(const Ontology& ontology,
                                       EntityScope scope) {
  std::vector<LabelRecord> records;
  for (const auto& [iri, entity] : ontology.entities()) {
    const bool in_scope =
        entity.category == EntityCategory::kOntologyClass ||
        (scope == EntityScope::kClassesAndProperties &&
         (entity.category == EntityCategory::kObjectProperty ||
          entity.category == EntityCategory::kDataProperty));
    if (!in_scope) continue;
    std::string display = DisplayLabel(entity);
    std::vector<std::string> tokens = NormalizeLabel(display);
    records.push_back({iri, std::move(display), std::move(tokens)});
  }
  return records;
}

}  // namespace ontomatch
