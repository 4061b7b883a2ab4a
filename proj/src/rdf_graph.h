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

// Internal triple representation shared by the RDF/XML and Turtle readers.

#ifndef ONTOMATCH_SRC_RDF_GRAPH_H_
#define ONTOMATCH_SRC_RDF_GRAPH_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/ingest.h"

namespace ontomatch::rdf {

struct Term {
  enum class Kind { kIri, kBlank, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;     // IRI, blank node label, or literal lexical form
  std::string language;  // literals only
  std::string datatype;  // literals only; empty for plain literals

  static Term MakeIri(std::string iri) {
    return {Kind::kIri, std::move(iri), {}, {}};
  }
  static Term MakeBlank(std::string label) {
    return {Kind::kBlank, std::move(label), {}, {}};
  }
  static Term MakeLiteral(std::string text, std::string language = {},
                          std::string datatype = {}) {
    return {Kind::kLiteral, std::move(text), std::move(language),
            std::move(datatype)};
  }

  bool is_iri() const { return kind == Kind::kIri; }
  bool is_blank() const { return kind == Kind::kBlank; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  std::string predicate;
  Term object;
  std::size_t line = 0;
};

std::vector<Triple> ParseTurtle(std::string_view text,
                                ParseDiagnostics& diagnostics);
std::vector<Triple> ParseRdfXml(std::string_view text,
                                ParseDiagnostics& diagnostics);

// Interprets a triple set as an ontology. Duplicate triples are collapsed.
Ontology BuildOntology(std::vector<Triple> triples,
                       ParseDiagnostics& diagnostics);

}  // namespace ontomatch::rdf

#endif  // ONTOMATCH_SRC_RDF_GRAPH_H_
