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

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "ontomatch/errors.h"
#include "ontomatch/labels.h"
#include "ontomatch/utf8.h"

namespace ontomatch {

void SynonymLexicon::AddSynset(const std::vector<std::string>& terms) {
  std::set<std::string> synset;
  for (const std::string& term : terms) {
    std::string normalized = JoinTokens(NormalizeLabel(term));
    if (!normalized.empty()) synset.insert(std::move(normalized));
  }
  if (synset.empty()) return;
  const auto id = static_cast<std::uint32_t>(synsets_.size());
  for (const std::string& term : synset) index_[term].push_back(id);
  synsets_.push_back(std::move(synset));
}

bool SynonymLexicon::AreSynonyms(std::string_view a, std::string_view b) const {
  const auto ia = index_.find(std::string(a));
  if (ia == index_.end()) return false;
  const auto ib = index_.find(std::string(b));
  if (ib == index_.end()) return false;
  const auto& x = ia->second;
  const auto& y = ib->second;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return true;
    if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool SynonymLexicon::Contains(std::string_view term) const {
  return index_.contains(std::string(term));
}

SynonymLexicon SynonymLexicon::Read(std::istream& in) {
  SynonymLexicon lexicon;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (utf8::FindInvalid(line)) {
      throw FormatError(line_number, "invalid UTF-8 in synonym lexicon");
    }
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      terms.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    lexicon.AddSynset(terms);
  }
  return lexicon;
}

SynonymLexicon SynonymLexicon::ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Read(in);
}

}  // namespace ontomatch
