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

#include "ontomatch/alignment_io.h"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ontomatch/errors.h"
#include "ontomatch/iri.h"
#include "ontomatch/utf8.h"

namespace ontomatch {
namespace {

using nlohmann::json;

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void CheckIri(const std::string& value, std::size_t line) {
  if (!IsAbsoluteIri(value)) {
    throw FormatError(line, "not an absolute IRI: '" + value + "'");
  }
}

void CheckScore(const std::string& text, std::size_t line) {
  char* end = nullptr;
  const double score = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() ||
      !(score >= 0.0 && score <= 1.0)) {
    throw FormatError(line, "score must be a number in [0, 1]: '" + text + "'");
  }
}

ReferenceAlignment ReadTsv(const std::string& content) {
  ReferenceAlignment alignment;
  std::optional<std::size_t> source_col;
  std::optional<std::size_t> target_col;
  std::optional<std::size_t> score_col;
  std::size_t columns = 0;
  bool have_header = false;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields = SplitTabs(line);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "source_iri") source_col = i;
        if (fields[i] == "target_iri") target_col = i;
        if (fields[i] == "score") score_col = i;
      }
      if (!source_col || !target_col) {
        throw FormatError(line_number,
                          "header must name source_iri and target_iri");
      }
      columns = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != columns) {
      throw FormatError(line_number,
                        fmt::format("expected {} columns, found {}", columns,
                                    fields.size()));
    }
    CheckIri(fields[*source_col], line_number);
    CheckIri(fields[*target_col], line_number);
    if (score_col) CheckScore(fields[*score_col], line_number);
    alignment.pairs.emplace(std::move(fields[*source_col]),
                            std::move(fields[*target_col]));
  }
  if (!have_header) throw FormatError(0, "missing header");
  return alignment;
}

ReferenceAlignment ReadJson(const std::string& content) {
  json document;
  try {
    document = json::parse(content);
  } catch (const json::parse_error& e) {
    const auto line = static_cast<std::size_t>(
        std::count(content.begin(),
                   content.begin() + static_cast<std::ptrdiff_t>(std::min(
                                         e.byte, content.size())),
                   '\n') +
        1);
    throw FormatError(line, "malformed JSON alignment");
  }
  if (!document.is_object() || !document.contains("correspondences") ||
      !document["correspondences"].is_array()) {
    throw FormatError(0, "JSON alignment needs a correspondences array");
  }
  ReferenceAlignment alignment;
  for (const json& item : document["correspondences"]) {
    if (!item.is_object() || !item.contains("source") ||
        !item.contains("target") || !item["source"].is_string() ||
        !item["target"].is_string()) {
      throw FormatError(0, "correspondence needs string source and target");
    }
    std::string source = item["source"].get<std::string>();
    std::string target = item["target"].get<std::string>();
    CheckIri(source, 0);
    CheckIri(target, 0);
    alignment.pairs.emplace(std::move(source), std::move(target));
  }
  return alignment;
}

}  // namespace

std::string FormatScore(double score) { return fmt::format("{:.4f}", score); }

void WriteAlignmentTsv(const Alignment& alignment, std::ostream& out) {
  out << "source_iri\ttarget_iri\trelation\tscore\n";
  for (const Correspondence& c : alignment.correspondences) {
    out << c.source.str() << '\t' << c.target.str() << '\t'
        << Correspondence::relation() << '\t' << FormatScore(c.score) << '\n';
  }
}

void WriteAlignmentJson(const Alignment& alignment, std::ostream& out) {
  out << "{\n";
  out << "  \"source\": " << json(alignment.source_ontology).dump() << ",\n";
  out << "  \"target\": " << json(alignment.target_ontology).dump() << ",\n";
  out << "  \"alpha\": " << FormatScore(alignment.alpha) << ",\n";
  out << "  \"correspondences\": [";
  const auto& list = alignment.correspondences;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Correspondence& c = list[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"source\": "
        << json(c.source.str()).dump()
        << ", \"target\": " << json(c.target.str()).dump()
        << ", \"relation\": \"" << Correspondence::relation()
        << "\", \"score\": " << FormatScore(c.score) << "}";
  }
  out << (list.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
}

ReferenceAlignment ReadAlignment(std::istream& in) {
  const std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  if (const auto bad = utf8::FindInvalid(content)) {
    throw FormatError(
        1 + static_cast<std::size_t>(std::count(
                content.begin(),
                content.begin() + static_cast<std::ptrdiff_t>(*bad), '\n')),
        "invalid UTF-8");
  }
  const std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    return ReadJson(content);
  }
  return ReadTsv(content);
}

ReferenceAlignment ReadAlignmentFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadAlignment(in);
}

}  // namespace ontomatch
