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

#include "ontomatch/ingest.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ontomatch/errors.h"
#include "ontomatch/utf8.h"
#include "rdf_graph.h"

namespace ontomatch {
namespace {

std::string_view SkipLeading(std::string_view bytes) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  while (!bytes.empty() && std::isspace(static_cast<unsigned char>(bytes[0]))) {
    bytes.remove_prefix(1);
  }
  return bytes;
}

// True if some line starts (after blanks) with a Turtle directive.
bool HasDirective(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    while (!line.empty() && (line[0] == ' ' || line[0] == '\t')) {
      line.remove_prefix(1);
    }
    if (line.starts_with("@prefix") || line.starts_with("@base")) return true;
    std::string head(line.substr(0, 7));
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if ((head.starts_with("PREFIX") && head.size() > 6 &&
         std::isspace(static_cast<unsigned char>(head[6]))) ||
        (head.starts_with("BASE") && head.size() > 4 &&
         std::isspace(static_cast<unsigned char>(head[4])))) {
      return true;
    }
    pos = end + 1;
  }
  return false;
}

std::size_t LineOfOffset(std::string_view bytes, std::size_t offset) {
  return 1 + static_cast<std::size_t>(
                 std::count(bytes.begin(), bytes.begin() + offset, '\n'));
}

}  // namespace

std::string_view FormatName(DocumentFormat format) {
  return format == DocumentFormat::kRdfXml ? "rdfxml" : "turtle";
}

DocumentFormat DetectFormat(std::string_view bytes) {
  const std::string_view head = SkipLeading(bytes);
  if (head.starts_with("<?xml") || head.starts_with("<rdf:RDF") ||
      head.starts_with("<!DOCTYPE rdf:RDF")) {
    return DocumentFormat::kRdfXml;
  }
  if (HasDirective(bytes)) return DocumentFormat::kTurtle;
  throw UnrecognizedFormat(
      "content is neither RDF/XML nor Turtle with a prefix/base directive");
}

ParseResult Parse(const SourceDocument& doc) {
  if (const auto bad = utf8::FindInvalid(doc.bytes)) {
    throw SyntaxError(LineOfOffset(doc.bytes, *bad), "invalid UTF-8");
  }
  DocumentFormat format = DocumentFormat::kTurtle;
  switch (doc.format_hint) {
    case FormatHint::kRdfXml:
      format = DocumentFormat::kRdfXml;
      break;
    case FormatHint::kTurtle:
      format = DocumentFormat::kTurtle;
      break;
    case FormatHint::kAuto:
      format = DetectFormat(doc.bytes);
      break;
  }
  ParseDiagnostics diagnostics;
  auto triples = format == DocumentFormat::kRdfXml
                     ? rdf::ParseRdfXml(doc.bytes, diagnostics)
                     : rdf::ParseTurtle(doc.bytes, diagnostics);
  Ontology ontology = rdf::BuildOntology(std::move(triples), diagnostics);
  return {std::move(ontology), std::move(diagnostics), format};
}

ParseResult ParseFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SourceDocument doc{buffer.str(), FormatHint::kAuto};
  if (path.extension() == ".ttl") doc.format_hint = FormatHint::kTurtle;
  return Parse(doc);
}

}  // namespace ontomatch
