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

#include <algorithm>
#include <numeric>
#include <vector>

#include "ontomatch/utf8.h"

namespace ontomatch {

std::size_t LevenshteinDistance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::size_t LevenshteinDistance(std::string_view a, std::string_view b) {
  return LevenshteinDistance(utf8::Decode(a), utf8::Decode(b));
}

double LevenshteinSimilarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  const std::size_t distance = LevenshteinDistance(a, b);
  // Divide once so equal ratios give identical doubles (4/5 == 0.8).
  return static_cast<double>(longest - distance) /
         static_cast<double>(longest);
}

double LevenshteinSimilarity(std::string_view a, std::string_view b) {
  return LevenshteinSimilarity(utf8::Decode(a), utf8::Decode(b));
}

}  // namespace ontomatch
