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

#include "cli.h"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "ontomatch/alignment_io.h"
#include "ontomatch/errors.h"
#include "ontomatch/evaluation.h"
#include "ontomatch/ingest.h"
#include "ontomatch/labels.h"
#include "ontomatch/lexicon.h"
#include "ontomatch/matcher.h"
#include "ontomatch/metrics.h"

#ifndef ONTOMATCH_VERSION
#define ONTOMATCH_VERSION "0.0.0"
#endif

namespace ontomatch::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Carries an exit code up to Run().
struct Failure {
  int code;
  std::string kind;
  std::string detail;
};

std::string ReadBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitParse, "io", path + ": cannot open"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

Ontology LoadOntology(const std::string& path, std::string* digest,
                      std::ostream& err) {
  const std::string bytes = ReadBytes(path);
  if (digest != nullptr) *digest = Sha256Hex(bytes);
  SourceDocument doc{bytes, FormatHint::kAuto};
  if (fs::path(path).extension() == ".ttl") doc.format_hint = FormatHint::kTurtle;
  try {
    ParseResult result = Parse(doc);
    for (const Diagnostic& warning : result.diagnostics.warnings) {
      err << "warning: " << path << ":" << warning.line << ": "
          << warning.message << "\n";
    }
    return std::move(result.ontology);
  } catch (const SyntaxError& e) {
    throw Failure{kExitParse, "parse",
                  fmt::format("{}:{}: {}", path, e.line(), e.what())};
  } catch (const PunningError& e) {
    throw Failure{kExitParse, "punning",
                  fmt::format("{}:{}: {}", path, e.line(), e.what())};
  } catch (const UnrecognizedFormat& e) {
    throw Failure{kExitParse, "format", fmt::format("{}: {}", path, e.what())};
  }
}

EntityScope ParseScope(const std::string& scope) {
  return scope == "all" ? EntityScope::kClassesAndProperties
                        : EntityScope::kClassesOnly;
}

std::string OneLine(std::string text) {
  std::replace_if(
      text.begin(), text.end(),
      [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

std::string UtcTimestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(
      std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

struct MatchOptions {
  std::string source;
  std::string target;
  double alpha = kDefaultAlpha;
  std::string synonyms;
  std::string format = "tsv";
  std::string scope = "classes";
  bool one_to_one = false;
  std::size_t workers = 0;
  std::string output;
  std::string manifest;
};

int CmdMatch(const MatchOptions& options, const std::vector<std::string>& args,
             std::ostream& out, std::ostream& err) {
  std::string source_digest;
  std::string target_digest;
  const Ontology source = LoadOntology(options.source, &source_digest, err);
  const Ontology target = LoadOntology(options.target, &target_digest, err);

  SynonymLexicon lexicon;
  std::string lexicon_digest;
  if (!options.synonyms.empty()) {
    const std::string bytes = ReadBytes(options.synonyms);
    lexicon_digest = Sha256Hex(bytes);
    std::istringstream in(bytes);
    try {
      lexicon = SynonymLexicon::Read(in);
    } catch (const FormatError& e) {
      throw Failure{kExitParse, "parse",
                    fmt::format("{}:{}: {}", options.synonyms, e.line(),
                                e.what())};
    }
  }

  MatchConfig config;
  config.alpha = options.alpha;
  config.scope = ParseScope(options.scope);
  config.one_to_one = options.one_to_one;
  config.workers = options.workers;

  MatchResult result;
  try {
    result = Match(source, target, lexicon, config);
  } catch (const EmptyOntology& e) {
    throw Failure{kExitEmpty, "empty", e.what()};
  }
  Alignment& alignment = result.alignment;
  if (alignment.source_ontology.empty()) alignment.source_ontology = options.source;
  if (alignment.target_ontology.empty()) alignment.target_ontology = options.target;

  std::ostringstream rendered;
  if (options.format == "json") {
    WriteAlignmentJson(alignment, rendered);
  } else {
    WriteAlignmentTsv(alignment, rendered);
  }
  if (options.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) throw Failure{kExitParse, "io", options.output + ": cannot write"};
    file << rendered.str();
  }

  json manifest = {
      {"command", "match"},
      {"arguments", args},
      {"inputs",
       json::array({{{"path", options.source}, {"sha256", source_digest}},
                    {{"path", options.target}, {"sha256", target_digest}}})},
      {"alpha", options.alpha},
      {"synonym_score", config.synonym_score},
      {"lexicon", options.synonyms.empty()
                      ? json(nullptr)
                      : json{{"path", options.synonyms},
                             {"sha256", lexicon_digest}}},
      {"scope", options.scope},
      {"one_to_one", options.one_to_one},
      {"format", options.format},
      {"correspondences", alignment.correspondences.size()},
      {"tool_version", ONTOMATCH_VERSION},
      {"created_at", UtcTimestamp()},
  };
  std::string manifest_path = options.manifest;
  if (manifest_path.empty() && !options.output.empty()) {
    manifest_path = options.output + ".manifest.json";
  }
  if (manifest_path.empty()) {
    err << "manifest: " << manifest.dump() << "\n";
  } else {
    std::ofstream file(manifest_path, std::ios::binary);
    if (!file) throw Failure{kExitParse, "io", manifest_path + ": cannot write"};
    file << manifest.dump(2) << "\n";
  }
  return kExitOk;
}

ReferenceAlignment LoadAlignment(const std::string& path) {
  const std::string bytes = ReadBytes(path);
  std::istringstream in(bytes);
  try {
    return ReadAlignment(in);
  } catch (const FormatError& e) {
    throw Failure{kExitParse, "parse",
                  fmt::format("{}:{}: {}", path, e.line(), e.what())};
  }
}

int CmdEval(const std::string& alignment_path,
            const std::string& reference_path, std::ostream& out) {
  const ReferenceAlignment produced = LoadAlignment(alignment_path);
  const ReferenceAlignment reference = LoadAlignment(reference_path);
  const EvaluationReport report = Evaluate(produced.pairs, reference);
  out << fmt::format("precision {:.3f} recall {:.3f} f {:.3f}\n",
                     report.precision, report.recall, report.f_measure);
  return kExitOk;
}

int CmdMetrics(const std::string& path, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const Ontology ontology = LoadOntology(path, nullptr, err);
  const MetricsReport m = ComputeMetrics(ontology);
  if (format == "json") {
    json record = {
        {"axioms", m.axioms},
        {"logical_axioms", m.logical_axioms},
        {"class_count", m.class_count},
        {"object_property_count", m.object_property_count},
        {"data_property_count", m.data_property_count},
        {"subclass_axiom_count", m.subclass_axiom_count},
        {"attribute_richness", m.attribute_richness},
        {"inheritance_richness", m.inheritance_richness},
        {"relation_richness", m.relation_richness},
        {"no_classes", m.no_classes},
        {"no_relations", m.no_relations},
    };
    out << record.dump(2) << "\n";
    return kExitOk;
  }
  const auto row = [&](std::string_view name, const std::string& value,
                       bool degenerate, std::string_view why) {
    out << fmt::format("{:<24}{}", name, value);
    if (degenerate) out << "  (undefined: " << why << ")";
    out << "\n";
  };
  const auto ratio = [](double v) { return fmt::format("{:.3f}", v); };
  row("Axioms", std::to_string(m.axioms), false, {});
  row("Logical axioms count", std::to_string(m.logical_axioms), false, {});
  row("Class count", std::to_string(m.class_count), false, {});
  row("Object property count", std::to_string(m.object_property_count), false,
      {});
  row("Data property count", std::to_string(m.data_property_count), false, {});
  row("Attribute Richness", ratio(m.attribute_richness), m.no_classes,
      "no classes");
  row("Inheritance Richness", ratio(m.inheritance_richness), m.no_classes,
      "no classes");
  row("Relation Richness", ratio(m.relation_richness), m.no_relations,
      "no subclass axioms or object properties");
  return kExitOk;
}

int CmdLabels(const std::string& path, const std::string& scope,
              std::ostream& out, std::ostream& err) {
  const Ontology ontology = LoadOntology(path, nullptr, err);
  for (const LabelRecord& record : ExtractLabels(ontology, ParseScope(scope))) {
    out << record.iri.str() << '\t' << OneLine(record.display_label) << '\t'
        << JoinTokens(record.tokens) << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Ontology matching, evaluation and metrics", "ontomatch"};
  app.set_version_flag("--version", ONTOMATCH_VERSION);
  app.require_subcommand(1);

  MatchOptions match;
  CLI::App* match_cmd =
      app.add_subcommand("match", "Align the classes of two ontologies");
  match_cmd->add_option("source", match.source, "Source ontology")->required();
  match_cmd->add_option("target", match.target, "Target ontology")->required();
  match_cmd->add_option("--alpha", match.alpha, "Acceptance threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  match_cmd->add_option("--synonyms", match.synonyms, "Synonym lexicon file");
  match_cmd->add_option("--format", match.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  match_cmd->add_option("--scope", match.scope, "Entities to match")
      ->check(CLI::IsMember({"classes", "all"}))
      ->capture_default_str();
  match_cmd->add_flag("--one-to-one", match.one_to_one,
                      "Reduce to a greedy 1:1 alignment");
  match_cmd->add_option("--workers", match.workers,
                        "Threads for scoring (0 = all cores)");
  match_cmd->add_option("-o,--output", match.output,
                        "Write the alignment here instead of stdout");
  match_cmd->add_option("--manifest", match.manifest,
                        "Write the run manifest here");

  std::string alignment_path;
  std::string reference_path;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Precision, recall and F-measure against a reference");
  eval_cmd->add_option("alignment", alignment_path, "Produced alignment")
      ->required();
  eval_cmd->add_option("reference", reference_path, "Reference alignment")
      ->required();

  std::string metrics_path;
  std::string metrics_format = "text";
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Schema size and richness metrics");
  metrics_cmd->add_option("ontology", metrics_path, "Ontology file")
      ->required();
  metrics_cmd->add_option("--format", metrics_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string labels_path;
  std::string labels_scope = "classes";
  CLI::App* labels_cmd =
      app.add_subcommand("labels", "Show the labels the matcher compares");
  labels_cmd->add_option("ontology", labels_path, "Ontology file")->required();
  labels_cmd->add_option("--scope", labels_scope, "Entities to list")
      ->check(CLI::IsMember({"classes", "all"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ONTOMATCH_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (match_cmd->parsed()) return CmdMatch(match, args, out, err);
    if (eval_cmd->parsed()) return CmdEval(alignment_path, reference_path, out);
    if (metrics_cmd->parsed()) {
      return CmdMetrics(metrics_path, metrics_format, out, err);
    }
    if (labels_cmd->parsed()) return CmdLabels(labels_path, labels_scope, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.kind << ": " << OneLine(f.detail) << "\n";
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "error: usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ontomatch::cli
