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

#ifndef ONTOMATCH_UTF8_H_
#define ONTOMATCH_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

// UTF-8 coding and the small slice of Unicode character properties the
// label normalizer needs.
namespace ontomatch::utf8 {

// Byte offset of the first ill-formed sequence, or nullopt if `text` is
// valid UTF-8 (no overlongs, surrogates, or code points above U+10FFFF).
std::optional<std::size_t> FindInvalid(std::string_view text);

// Decodes to scalar values; ill-formed bytes become U+FFFD.
std::u32string Decode(std::string_view text);

void Append(char32_t code_point, std::string& out);
std::string Encode(std::u32string_view text);

// Simple (1:1) lowercase mapping for Latin, Greek, Cyrillic, and fullwidth
// Latin. Other code points map to themselves.
char32_t ToLower(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);
bool IsWhitespace(char32_t c);

}  // namespace ontomatch::utf8

#endif  // ONTOMATCH_UTF8_H_
