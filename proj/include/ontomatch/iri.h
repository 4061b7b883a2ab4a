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

#ifndef ONTOMATCH_IRI_H_
#define ONTOMATCH_IRI_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ontomatch {

// True for strings usable as an entity name: an IRI with a "://" scheme
// separator, or a URN of the form urn:<nid>:<nss>.
bool IsAbsoluteIri(std::string_view value);

// An absolute IRI. Equality is exact string comparison; no normalization is
// applied.
class Iri {
 public:
  // Throws std::invalid_argument unless IsAbsoluteIri(value).
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend std::strong_ordering operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// Resolves a (possibly relative) IRI reference against a base per RFC 3986
// section 5.2. Returns nullopt when the reference is relative and the base is
// empty.
std::optional<std::string> ResolveIri(std::string_view base,
                                      std::string_view reference);

// True if the reference carries its own scheme.
bool HasScheme(std::string_view reference);

}  // namespace ontomatch

#endif  // ONTOMATCH_IRI_H_
