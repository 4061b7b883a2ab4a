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

// Minimal namespace-aware XML reader producing an element tree. Supports the
// features RDF/XML producers emit: XML declaration, comments, processing
// instructions, CDATA, character references, and internal DTD subsets with
// general entity declarations (used for "&owl;"-style abbreviations).

#ifndef ONTOMATCH_SRC_XML_READER_H_
#define ONTOMATCH_SRC_XML_READER_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ontomatch::xml {

struct Attribute {
  std::string ns;  // empty for unprefixed attributes
  std::string local;
  std::string qname;
  std::string value;
};

struct Element;

// Either a child element or a run of character data.
struct Node {
  std::unique_ptr<Element> element;
  std::string text;
  std::size_t line = 0;

  bool is_element() const { return element != nullptr; }
};

struct Element {
  std::string ns;
  std::string local;
  std::string qname;
  std::size_t line = 0;
  std::vector<Attribute> attributes;  // namespace declarations excluded
  std::vector<Node> children;
  std::string_view inner_source;  // raw markup between the tags

  const Attribute* FindAttribute(std::string_view ns,
                                 std::string_view local) const;
};

// Parses a complete document and returns its root element. Throws
// SyntaxError on malformed input.
std::unique_ptr<Element> Parse(std::string_view text);

}  // namespace ontomatch::xml

#endif  // ONTOMATCH_SRC_XML_READER_H_
