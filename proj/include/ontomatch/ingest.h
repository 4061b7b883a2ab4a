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

#ifndef ONTOMATCH_INGEST_H_
#define ONTOMATCH_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/ontology.h"

namespace ontomatch {

enum class DocumentFormat { kRdfXml, kTurtle };
enum class FormatHint { kAuto, kRdfXml, kTurtle };

std::string_view FormatName(DocumentFormat format);

struct SourceDocument {
  std::string bytes;
  FormatHint format_hint = FormatHint::kAuto;
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct ParseDiagnostics {
  std::vector<Diagnostic> warnings;
  // Triples that fall outside the recognized vocabulary and contribute
  // neither to the model nor to the axiom counts.
  std::size_t skipped_triples = 0;
};

struct ParseResult {
  Ontology ontology;
  ParseDiagnostics diagnostics;
  DocumentFormat format;
};

// RdfXml when the content (after whitespace and an optional BOM) opens with
// an XML declaration, an rdf:RDF element, or an rdf:RDF doctype; Turtle when
// it carries a prefix or base directive. Throws UnrecognizedFormat otherwise.
DocumentFormat DetectFormat(std::string_view bytes);

// Parses an OWL document into the ontology model.
//
// Recognized: rdf:type declarations of owl:Class, owl:ObjectProperty,
// owl:DatatypeProperty, owl:NamedIndividual and owl:Ontology; rdfs:label
// annotations; rdfs:subClassOf between named classes. Other recognizable
// axiom triples only feed the axiom counts. Anything else is counted in
// skipped_triples. owl:imports is reported as a warning and not followed.
//
// Throws SyntaxError for malformed input (including relative IRIs with no
// base in scope) and PunningError when one IRI is declared under two
// categories.
ParseResult Parse(const SourceDocument& doc);

// Reads and parses a file. The extension picks the hint: ".ttl" is Turtle,
// anything else is detected from content. Throws std::runtime_error when the
// file cannot be read.
ParseResult ParseFile(const std::filesystem::path& path);

}  // namespace ontomatch

#endif  // ONTOMATCH_INGEST_H_
