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

#include "xml_reader.h"

#include <cctype>
#include <map>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/utf8.h"
#include "ontomatch/vocab.h"

namespace ontomatch::xml {
namespace {

constexpr int kMaxEntityDepth = 16;

bool IsNameStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == ':' || c >= 0x80;
}

bool IsNameChar(unsigned char c) {
  return IsNameStart(c) || std::isdigit(c) || c == '-' || c == '.';
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    if (text_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
  }

  std::unique_ptr<Element> Run() {
    Prolog();
    if (Peek() != '<') Fail("expected root element");
    std::vector<std::map<std::string, std::string>> scopes;
    scopes.push_back({{"xml", std::string(vocab::kXmlNs)}});
    auto root = ElementAt(scopes);
    Misc();
    if (!AtEnd()) Fail("content after root element");
    return root;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_).starts_with(s);
  }
  char Next() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }
  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !AtEnd(); ++i) Next();
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError(line_, message);
  }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(Peek())) Next();
  }

  void SkipPast(std::string_view terminator, const char* what) {
    const std::size_t end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) Fail(std::string("unterminated ") + what);
    Advance(end + terminator.size() - pos_);
  }

  void Prolog() {
    Misc();
    if (LookingAt("<!DOCTYPE")) {
      Doctype();
      Misc();
    }
  }

  // Comments, processing instructions, and whitespace.
  void Misc() {
    for (;;) {
      SkipSpace();
      if (LookingAt("<!--")) {
        SkipPast("-->", "comment");
      } else if (LookingAt("<?")) {
        SkipPast("?>", "processing instruction");
      } else {
        return;
      }
    }
  }

  std::string Name() {
    if (AtEnd() || !IsNameStart(static_cast<unsigned char>(Peek()))) {
      Fail("expected a name");
    }
    std::string name;
    while (!AtEnd() && IsNameChar(static_cast<unsigned char>(Peek()))) {
      name.push_back(Next());
    }
    return name;
  }

  std::string QuotedRaw() {
    const char quote = Peek();
    if (quote != '"' && quote != '\'') Fail("expected quoted value");
    Next();
    const std::size_t end = text_.find(quote, pos_);
    if (end == std::string_view::npos) Fail("unterminated quoted value");
    std::string value(text_.substr(pos_, end - pos_));
    Advance(end + 1 - pos_);
    return value;
  }

  void Doctype() {
    Advance(9);
    SkipSpace();
    Name();
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated DOCTYPE");
      const char c = Peek();
      if (c == '>') {
        Next();
        return;
      }
      if (c == '[') {
        Next();
        InternalSubset();
      } else if (c == '"' || c == '\'') {
        QuotedRaw();
      } else {
        Name();  // SYSTEM / PUBLIC
      }
    }
  }

  void InternalSubset() {
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated DTD internal subset");
      if (Peek() == ']') {
        Next();
        return;
      }
      if (LookingAt("<!--")) {
        SkipPast("-->", "comment");
      } else if (LookingAt("<?")) {
        SkipPast("?>", "processing instruction");
      } else if (LookingAt("<!ENTITY")) {
        Advance(8);
        SkipSpace();
        bool parameter = false;
        if (Peek() == '%') {
          parameter = true;
          Next();
          SkipSpace();
        }
        const std::string name = Name();
        SkipSpace();
        if (Peek() == '"' || Peek() == '\'') {
          std::string value = QuotedRaw();
          if (!parameter && !entities_.contains(name)) {
            entities_.emplace(name, std::move(value));
          }
        }
        SkipPast(">", "entity declaration");
      } else if (LookingAt("<!")) {
        // Element, attribute-list and notation declarations may quote '>'.
        while (!AtEnd() && Peek() != '>') {
          if (Peek() == '"' || Peek() == '\'') {
            QuotedRaw();
          } else {
            Next();
          }
        }
        if (AtEnd()) Fail("unterminated markup declaration");
        Next();
      } else if (Peek() == '%') {
        SkipPast(";", "parameter entity reference");
      } else {
        Fail("unexpected content in DTD internal subset");
      }
    }
  }

  // Expands character and entity references in `raw`.
  std::string Expand(std::string_view raw, int depth) {
    if (depth > kMaxEntityDepth) Fail("entity expansion too deep");
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c != '&') {
        out.push_back(c);
        ++i;
        continue;
      }
      const std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) Fail("unterminated reference");
      const std::string_view ref = raw.substr(i + 1, semi - i - 1);
      i = semi + 1;
      if (ref.starts_with('#')) {
        out += CharRef(ref);
      } else if (ref == "lt") {
        out.push_back('<');
      } else if (ref == "gt") {
        out.push_back('>');
      } else if (ref == "amp") {
        out.push_back('&');
      } else if (ref == "quot") {
        out.push_back('"');
      } else if (ref == "apos") {
        out.push_back('\'');
      } else {
        auto it = entities_.find(std::string(ref));
        if (it == entities_.end()) {
          Fail("undefined entity '&" + std::string(ref) + ";'");
        }
        out += Expand(it->second, depth + 1);
      }
    }
    return out;
  }

  std::string CharRef(std::string_view ref) {
    char32_t value = 0;
    const bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
    const std::string_view digits = ref.substr(hex ? 2 : 1);
    if (digits.empty() || digits.size() > 8) Fail("malformed character reference");
    for (const char d : digits) {
      const unsigned char u = static_cast<unsigned char>(d);
      if (hex && std::isxdigit(u)) {
        value = value * 16 + static_cast<char32_t>(
                                 std::isdigit(u) ? d - '0'
                                                 : std::tolower(u) - 'a' + 10);
      } else if (!hex && std::isdigit(u)) {
        value = value * 10 + static_cast<char32_t>(d - '0');
      } else {
        Fail("malformed character reference");
      }
    }
    if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      Fail("character reference out of range");
    }
    std::string out;
    utf8::Append(value, out);
    return out;
  }

  static std::pair<std::string_view, std::string_view> SplitQName(
      std::string_view qname) {
    const std::size_t colon = qname.find(':');
    if (colon == std::string_view::npos) return {{}, qname};
    return {qname.substr(0, colon), qname.substr(colon + 1)};
  }

  std::string LookupPrefix(
      const std::vector<std::map<std::string, std::string>>& scopes,
      std::string_view prefix, bool element) {
    if (prefix.empty() && !element) return {};
    const std::string key(prefix);
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(key);
      if (found != it->end()) return found->second;
    }
    if (prefix.empty()) return {};
    Fail("undeclared namespace prefix '" + key + "'");
  }

  std::unique_ptr<Element> ElementAt(
      std::vector<std::map<std::string, std::string>>& scopes) {
    auto element = std::make_unique<Element>();
    element->line = line_;
    Next();  // '<'
    element->qname = Name();

    std::vector<Attribute> raw_attributes;
    std::map<std::string, std::string> scope;
    bool empty = false;
    for (;;) {
      const bool had_space = !AtEnd() && IsSpace(Peek());
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag <" + element->qname + ">");
      if (Peek() == '/') {
        Next();
        if (Peek() != '>') Fail("expected '>' after '/'");
        Next();
        empty = true;
        break;
      }
      if (Peek() == '>') {
        Next();
        break;
      }
      if (!had_space) Fail("expected whitespace between attributes");
      Attribute attribute;
      attribute.qname = Name();
      SkipSpace();
      if (Peek() != '=') Fail("expected '=' after attribute name");
      Next();
      SkipSpace();
      std::string value = Expand(QuotedRaw(), 0);
      for (char& c : value) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
      }
      if (attribute.qname == "xmlns") {
        scope[""] = std::move(value);
      } else if (attribute.qname.starts_with("xmlns:")) {
        scope[attribute.qname.substr(6)] = std::move(value);
      } else {
        attribute.value = std::move(value);
        raw_attributes.push_back(std::move(attribute));
      }
    }

    scopes.push_back(std::move(scope));
    const auto [prefix, local] = SplitQName(element->qname);
    element->ns = LookupPrefix(scopes, prefix, true);
    element->local = std::string(local);
    for (Attribute& attribute : raw_attributes) {
      const auto [attr_prefix, attr_local] = SplitQName(attribute.qname);
      attribute.ns = LookupPrefix(scopes, attr_prefix, false);
      attribute.local = std::string(attr_local);
      element->attributes.push_back(std::move(attribute));
    }

    if (!empty) {
      const std::size_t inner_begin = pos_;
      std::size_t inner_end = pos_;
      Content(*element, scopes, inner_end);
      element->inner_source = text_.substr(inner_begin, inner_end - inner_begin);
    }
    scopes.pop_back();
    return element;
  }

  void Content(Element& element,
               std::vector<std::map<std::string, std::string>>& scopes,
               std::size_t& inner_end) {
    std::string text;
    std::size_t text_line = line_;
    const auto flush = [&] {
      if (!text.empty()) {
        Node node;
        node.text = std::move(text);
        node.line = text_line;
        element.children.push_back(std::move(node));
        text.clear();
      }
    };
    for (;;) {
      if (AtEnd()) Fail("unterminated element <" + element.qname + ">");
      if (LookingAt("</")) {
        inner_end = pos_;
        Advance(2);
        const std::string closing = Name();
        if (closing != element.qname) {
          Fail("mismatched end tag </" + closing + "> for <" + element.qname +
               ">");
        }
        SkipSpace();
        if (Peek() != '>') Fail("expected '>' in end tag");
        Next();
        flush();
        return;
      }
      if (LookingAt("<!--")) {
        SkipPast("-->", "comment");
      } else if (LookingAt("<![CDATA[")) {
        if (text.empty()) text_line = line_;
        Advance(9);
        const std::size_t end = text_.find("]]>", pos_);
        if (end == std::string_view::npos) Fail("unterminated CDATA section");
        text.append(text_.substr(pos_, end - pos_));
        Advance(end + 3 - pos_);
      } else if (LookingAt("<?")) {
        SkipPast("?>", "processing instruction");
      } else if (Peek() == '<') {
        flush();
        Node node;
        node.line = line_;
        node.element = ElementAt(scopes);
        element.children.push_back(std::move(node));
        text_line = line_;
      } else {
        if (text.empty()) text_line = line_;
        const std::size_t start = pos_;
        while (!AtEnd() && Peek() != '<') Next();
        text += Expand(text_.substr(start, pos_ - start), 0);
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::string> entities_;
};

}  // namespace

const Attribute* Element::FindAttribute(std::string_view ns_uri,
                                        std::string_view local_name) const {
  for (const Attribute& attribute : attributes) {
    if (attribute.ns == ns_uri && attribute.local == local_name) {
      return &attribute;
    }
  }
  return nullptr;
}

std::unique_ptr<Element> Parse(std::string_view text) {
  return Reader(text).Run();
}

}  // namespace ontomatch::xml
