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

#ifndef ONTOMATCH_LEVENSHTEIN_H_
#define ONTOMATCH_LEVENSHTEIN_H_

#include <cstddef>
#include <string_view>

namespace ontomatch {

// Edit distance with unit insert, delete and substitute costs, counted over
// Unicode scalar values. The string_view overloads decode UTF-8.
std::size_t LevenshteinDistance(std::u32string_view a, std::u32string_view b);
std::size_t LevenshteinDistance(std::string_view a, std::string_view b);

// 1 - distance / max(|a|, |b|), and 1 when both are empty.
double LevenshteinSimilarity(std::u32string_view a, std::u32string_view b);
double LevenshteinSimilarity(std::string_view a, std::string_view b);

}  // namespace ontomatch

#endif  // ONTOMATCH_LEVENSHTEIN_H_
