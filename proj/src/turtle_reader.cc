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

// Turtle reader. Covers the full W3C Turtle grammar except that prefixed
// local names are accepted with a slightly looser character set.

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/iri.h"
#include "ontomatch/utf8.h"
#include "ontomatch/vocab.h"
#include "rdf_graph.h"

namespace ontomatch::rdf {
namespace {

class TurtleReader {
 public:
  explicit TurtleReader(std::string_view text) : text_(text) {}

  std::vector<Triple> Run() {
    SkipSpace();
    while (!AtEnd()) {
      Statement();
      SkipSpace();
    }
    return std::move(triples_);
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char Next() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError(line_, message);
  }

  void Expect(char c) {
    SkipSpace();
    if (Peek() != c) {
      Fail(std::string("expected '") + c + "' but found " + Describe());
    }
    Next();
  }

  std::string Describe() const {
    if (AtEnd()) return "end of input";
    return std::string("'") + Peek() + "'";
  }

  void SkipSpace() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Next();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Next();
      } else {
        break;
      }
    }
  }

  bool MatchKeyword(std::string_view keyword, bool case_insensitive) {
    if (pos_ + keyword.size() > text_.size()) return false;
    for (std::size_t i = 0; i < keyword.size(); ++i) {
      char c = text_[pos_ + i];
      if (case_insensitive) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      if (c != keyword[i]) return false;
    }
    const char after = Peek(keyword.size());
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' ||
        after == ':') {
      return false;
    }
    for (std::size_t i = 0; i < keyword.size(); ++i) Next();
    return true;
  }

  void Statement() {
    if (Peek() == '@') {
      Next();
      if (MatchKeyword("prefix", false)) {
        PrefixDirective();
        Expect('.');
      } else if (MatchKeyword("base", false)) {
        BaseDirective();
        Expect('.');
      } else {
        Fail("unknown directive");
      }
      return;
    }
    if (MatchKeyword("prefix", true)) {
      PrefixDirective();
      return;
    }
    if (MatchKeyword("base", true)) {
      BaseDirective();
      return;
    }
    Triples();
    Expect('.');
  }

  void PrefixDirective() {
    SkipSpace();
    std::string prefix;
    while (!AtEnd() && Peek() != ':') {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Fail("malformed prefix name");
      }
      prefix.push_back(Next());
    }
    if (AtEnd()) Fail("expected ':' in prefix declaration");
    Next();
    SkipSpace();
    prefixes_[prefix] = IriRef();
  }

  void BaseDirective() {
    SkipSpace();
    base_ = IriRef();
  }

  void Triples() {
    SkipSpace();
    if (Peek() == '[') {
      const Term subject = BlankNodePropertyList();
      SkipSpace();
      if (Peek() != '.') PredicateObjectList(subject);
      return;
    }
    const std::size_t line = line_;
    Term subject;
    if (Peek() == '(') {
      subject = Collection();
    } else if (Peek() == '_' && Peek(1) == ':') {
      subject = BlankLabel();
    } else {
      subject = Term::MakeIri(Iri(line));
    }
    PredicateObjectList(subject);
  }

  void PredicateObjectList(const Term& subject) {
    for (;;) {
      SkipSpace();
      const std::string predicate = Verb();
      ObjectList(subject, predicate);
      SkipSpace();
      if (Peek() != ';') return;
      while (Peek() == ';') {
        Next();
        SkipSpace();
      }
      // A trailing ';' may close the list.
      if (Peek() == '.' || Peek() == ']' || AtEnd()) return;
    }
  }

  void ObjectList(const Term& subject, const std::string& predicate) {
    for (;;) {
      SkipSpace();
      const std::size_t line = line_;
      Term object = Object();
      triples_.push_back({subject, predicate, std::move(object), line});
      SkipSpace();
      if (Peek() != ',') return;
      Next();
    }
  }

  std::string Verb() {
    if (Peek() == 'a') {
      const char after = Peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' ||
          after == '<' || after == '[' || after == '"' || after == '(' ||
          after == '#') {
        Next();
        return std::string(vocab::kRdfType);
      }
    }
    return Iri(line_);
  }

  Term Object() {
    const char c = Peek();
    if (c == '<') return Term::MakeIri(Iri(line_));
    if (c == '_' && Peek(1) == ':') return BlankLabel();
    if (c == '[') return BlankNodePropertyList();
    if (c == '(') return Collection();
    if (c == '"' || c == '\'') return StringLiteral();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      return NumericLiteral();
    }
    if (MatchKeyword("true", false)) {
      return Term::MakeLiteral("true", {}, std::string(vocab::kXsdBoolean));
    }
    if (MatchKeyword("false", false)) {
      return Term::MakeLiteral("false", {}, std::string(vocab::kXsdBoolean));
    }
    return Term::MakeIri(Iri(line_));
  }

  Term BlankNodePropertyList() {
    Next();  // '['
    Term node = Term::MakeBlank("g" + std::to_string(blank_counter_++));
    SkipSpace();
    if (Peek() != ']') PredicateObjectList(node);
    Expect(']');
    return node;
  }

  Term Collection() {
    Next();  // '('
    std::vector<std::pair<Term, std::size_t>> items;
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated collection");
      if (Peek() == ')') {
        Next();
        break;
      }
      const std::size_t line = line_;
      items.emplace_back(Object(), line);
    }
    if (items.empty()) return Term::MakeIri(std::string(vocab::kRdfNil));
    const Term head = Term::MakeBlank("g" + std::to_string(blank_counter_++));
    Term current = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      triples_.push_back({current, std::string(vocab::kRdfFirst),
                          std::move(items[i].first), items[i].second});
      Term rest = i + 1 < items.size()
                      ? Term::MakeBlank("g" + std::to_string(blank_counter_++))
                      : Term::MakeIri(std::string(vocab::kRdfNil));
      triples_.push_back(
          {current, std::string(vocab::kRdfRest), rest, items[i].second});
      current = std::move(rest);
    }
    return head;
  }

  Term BlankLabel() {
    Next();
    Next();
    std::string label;
    while (!AtEnd()) {
      const unsigned char c = static_cast<unsigned char>(Peek());
      if (std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80) {
        label.push_back(Next());
      } else {
        break;
      }
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (label.empty()) Fail("empty blank node label");
    return Term::MakeBlank("u" + label);
  }

  // IRIREF or prefixed name, resolved to an absolute IRI.
  std::string Iri(std::size_t line) {
    if (Peek() == '<') return IriRef();
    return PrefixedName(line);
  }

  std::string IriRef() {
    if (Peek() != '<') Fail("expected IRI but found " + Describe());
    Next();
    std::string raw;
    for (;;) {
      if (AtEnd()) Fail("unterminated IRI");
      const char c = Next();
      if (c == '>') break;
      if (c == '\\') {
        const char kind = AtEnd() ? '\0' : Next();
        if (kind != 'u' && kind != 'U') Fail("bad escape in IRI");
        utf8::Append(HexEscape(kind == 'u' ? 4 : 8), raw);
        continue;
      }
      if (c == ' ' || c == '\n' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        Fail("illegal character in IRI");
      }
      raw.push_back(c);
    }
    return Resolve(raw);
  }

  std::string Resolve(const std::string& reference) {
    if (HasScheme(reference)) return *ResolveIri({}, reference);
    auto resolved = ResolveIri(base_, reference);
    if (!resolved) Fail("relative IRI <" + reference + "> with no base");
    return *resolved;
  }

  char32_t HexEscape(int digits) {
    char32_t value = 0;
    for (int i = 0; i < digits; ++i) {
      if (AtEnd() || !std::isxdigit(static_cast<unsigned char>(Peek()))) {
        Fail("bad unicode escape");
      }
      const char h = Next();
      value = value * 16 +
              static_cast<char32_t>(std::isdigit(static_cast<unsigned char>(h))
                                        ? h - '0'
                                        : std::tolower(h) - 'a' + 10);
    }
    if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      Fail("escape is not a unicode scalar value");
    }
    return value;
  }

  std::string PrefixedName(std::size_t line) {
    std::string prefix;
    while (!AtEnd() && Peek() != ':') {
      const unsigned char c = static_cast<unsigned char>(Peek());
      if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80)) {
        Fail("expected IRI or prefixed name but found " + Describe());
      }
      prefix.push_back(Next());
    }
    if (AtEnd()) Fail("expected ':' in prefixed name");
    Next();
    std::string local;
    std::size_t escaped_prefix = 0;  // local[0, escaped_prefix) is final
    while (!AtEnd()) {
      const unsigned char c = static_cast<unsigned char>(Peek());
      if (c == '\\') {
        Next();
        if (AtEnd()) Fail("dangling escape in prefixed name");
        local.push_back(Next());
        escaped_prefix = local.size();
      } else if (std::isalnum(c) || c == '_' || c == '-' || c == '.' ||
                 c == ':' || c == '%' || c >= 0x80) {
        local.push_back(Next());
      } else {
        break;
      }
    }
    while (local.size() > escaped_prefix && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      throw SyntaxError(line, "undeclared prefix '" + prefix + ":'");
    }
    return it->second + local;
  }

  Term StringLiteral() {
    const char quote = Next();
    const bool long_form = Peek() == quote && Peek(1) == quote;
    if (long_form) {
      Next();
      Next();
    }
    std::string value;
    for (;;) {
      if (AtEnd()) Fail("unterminated string literal");
      const char c = Peek();
      if (c == quote) {
        if (!long_form) {
          Next();
          break;
        }
        if (Peek(1) == quote && Peek(2) == quote) {
          Next();
          Next();
          Next();
          // Quotes immediately before the closing delimiter are content.
          while (Peek() == quote) value.push_back(Next());
          break;
        }
      }
      if (!long_form && (c == '\n' || c == '\r')) {
        Fail("newline in short string literal");
      }
      Next();
      if (c != '\\') {
        value.push_back(c);
        continue;
      }
      if (AtEnd()) Fail("unterminated escape");
      const char e = Next();
      switch (e) {
        case 't': value.push_back('\t'); break;
        case 'b': value.push_back('\b'); break;
        case 'n': value.push_back('\n'); break;
        case 'r': value.push_back('\r'); break;
        case 'f': value.push_back('\f'); break;
        case '"': value.push_back('"'); break;
        case '\'': value.push_back('\''); break;
        case '\\': value.push_back('\\'); break;
        case 'u': utf8::Append(HexEscape(4), value); break;
        case 'U': utf8::Append(HexEscape(8), value); break;
        default: Fail(std::string("unknown escape '\\") + e + "'");
      }
    }
    if (Peek() == '@') {
      Next();
      std::string language;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                          Peek() == '-')) {
        language.push_back(Next());
      }
      if (language.empty()) Fail("empty language tag");
      return Term::MakeLiteral(std::move(value), std::move(language));
    }
    if (Peek() == '^' && Peek(1) == '^') {
      Next();
      Next();
      return Term::MakeLiteral(std::move(value), {}, Iri(line_));
    }
    return Term::MakeLiteral(std::move(value));
  }

  Term NumericLiteral() {
    std::string lexical;
    if (Peek() == '+' || Peek() == '-') lexical.push_back(Next());
    bool has_dot = false;
    bool has_exp = false;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) {
      lexical.push_back(Next());
    }
    if (Peek() == '.' && std::isdigit(static_cast<unsigned char>(Peek(1)))) {
      has_dot = true;
      lexical.push_back(Next());
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        lexical.push_back(Next());
      }
    }
    if (Peek() == 'e' || Peek() == 'E') {
      has_exp = true;
      lexical.push_back(Next());
      if (Peek() == '+' || Peek() == '-') lexical.push_back(Next());
      if (!std::isdigit(static_cast<unsigned char>(Peek()))) {
        Fail("malformed exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        lexical.push_back(Next());
      }
    }
    if (lexical.empty() || lexical == "+" || lexical == "-") {
      Fail("malformed number");
    }
    const std::string_view type = has_exp   ? vocab::kXsdDouble
                                  : has_dot ? vocab::kXsdDecimal
                                            : vocab::kXsdInteger;
    return Term::MakeLiteral(std::move(lexical), {}, std::string(type));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::string base_;
  std::map<std::string, std::string> prefixes_;
  std::size_t blank_counter_ = 0;
  std::vector<Triple> triples_;
};

}  // namespace

std::vector<Triple> ParseTurtle(std::string_view text,
                                ParseDiagnostics& /*diagnostics*/) {
  return TurtleReader(text).Run();
}

}  // namespace ontomatch::rdf
