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

#ifndef ONTOMATCH_LEXICON_H_
#define ONTOMATCH_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontomatch {

// Synonym sets over normalized terms. Terms are run through the label
// normalizer on insertion, so "Loan_Repayment", "loan repayment" and
// "LoanRepayment" are the same term.
class SynonymLexicon {
 public:
  // Adds one synset. Terms that normalize to nothing are dropped.
  void AddSynset(const std::vector<std::string>& terms);

  // True when a and b (already normalized, space-joined) share a synset.
  // Symmetric. A term is not its own synonym unless it is in a synset.
  bool AreSynonyms(std::string_view a, std::string_view b) const;

  bool Contains(std::string_view term) const;
  const std::vector<std::set<std::string>>& synsets() const {
    return synsets_;
  }
  bool empty() const { return synsets_.empty(); }

  // One synset per line, terms separated by commas; lines whose first
  // non-blank character is '#' are comments. Throws FormatError on invalid
  // UTF-8.
  static SynonymLexicon Read(std::istream& in);
  // Throws std::runtime_error when the file cannot be opened.
  static SynonymLexicon ReadFile(const std::filesystem::path& path);

 private:
  std::vector<std::set<std::string>> synsets_;
  // term -> ascending synset ids
  std::unordered_map<std::string, std::vector<std::uint32_t>> index_;
};

}  // namespace ontomatch

#endif  // ONTOMATCH_LEXICON_H_
