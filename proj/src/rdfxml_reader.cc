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

// RDF/XML reader: walks the XML element tree following the RDF/XML
// striped syntax (node elements alternate with property elements).

#include <string>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/iri.h"
#include "ontomatch/vocab.h"
#include "rdf_graph.h"
#include "xml_reader.h"

namespace ontomatch::rdf {
namespace {

using xml::Attribute;
using xml::Element;

bool IsWhitespaceOnly(std::string_view text) {
  for (const char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
  }
  return true;
}

// Attributes in the rdf namespace that are syntax, not properties.
bool IsSyntaxAttribute(std::string_view local) {
  return local == "about" || local == "ID" || local == "nodeID" ||
         local == "resource" || local == "parseType" || local == "datatype" ||
         local == "bagID" || local == "aboutEach" || local == "aboutEachPrefix";
}

struct Context {
  std::string base;
  std::string language;
};

class RdfXmlReader {
 public:
  explicit RdfXmlReader(ParseDiagnostics& diagnostics)
      : diagnostics_(diagnostics) {}

  std::vector<Triple> Run(const Element& root) {
    Context context = Inherit({}, root);
    if (root.ns == vocab::kRdf && root.local == "RDF") {
      for (const xml::Node& child : root.children) {
        if (child.is_element()) {
          NodeElement(*child.element, context);
        } else if (!IsWhitespaceOnly(child.text)) {
          throw SyntaxError(child.line, "text content directly inside rdf:RDF");
        }
      }
    } else {
      NodeElement(root, context);
    }
    return std::move(triples_);
  }

 private:
  Context Inherit(const Context& parent, const Element& element) {
    Context context = parent;
    if (const Attribute* base = element.FindAttribute(vocab::kXmlNs, "base")) {
      std::string value = base->value;
      // A base never carries a fragment.
      if (const std::size_t hash = value.find('#'); hash != std::string::npos) {
        value.erase(hash);
      }
      context.base = Resolve(parent, value, element.line);
    }
    if (const Attribute* lang = element.FindAttribute(vocab::kXmlNs, "lang")) {
      context.language = lang->value;
    }
    return context;
  }

  std::string Resolve(const Context& context, std::string_view reference,
                      std::size_t line) const {
    auto resolved = ResolveIri(context.base, reference);
    if (!resolved) {
      throw SyntaxError(line, "relative IRI '" + std::string(reference) +
                                  "' with no base");
    }
    return *resolved;
  }

  Term NewBlank() { return Term::MakeBlank("g" + std::to_string(counter_++)); }

  void Emit(Term subject, std::string predicate, Term object,
            std::size_t line) {
    triples_.push_back(
        {std::move(subject), std::move(predicate), std::move(object), line});
  }

  // Returns the subject the node element denotes.
  Term NodeElement(const Element& element, const Context& parent) {
    const Context context = Inherit(parent, element);
    Term subject;
    if (const Attribute* about = element.FindAttribute(vocab::kRdf, "about")) {
      subject = Term::MakeIri(Resolve(context, about->value, element.line));
    } else if (const Attribute* id = element.FindAttribute(vocab::kRdf, "ID")) {
      subject = Term::MakeIri(Resolve(context, "#" + id->value, element.line));
    } else if (const Attribute* node =
                   element.FindAttribute(vocab::kRdf, "nodeID")) {
      subject = Term::MakeBlank("u" + node->value);
    } else {
      subject = NewBlank();
    }

    if (!(element.ns == vocab::kRdf && element.local == "Description")) {
      Emit(subject, std::string(vocab::kRdfType),
           Term::MakeIri(element.ns + element.local), element.line);
    }
    PropertyAttributes(element, subject, context);

    int li_counter = 1;
    for (const xml::Node& child : element.children) {
      if (child.is_element()) {
        PropertyElement(*child.element, subject, context, li_counter);
      } else if (!IsWhitespaceOnly(child.text)) {
        throw SyntaxError(child.line, "unexpected text inside node element <" +
                                          element.qname + ">");
      }
    }
    return subject;
  }

  void PropertyAttributes(const Element& element, const Term& subject,
                          const Context& context) {
    for (const Attribute& attribute : element.attributes) {
      if (attribute.ns == vocab::kXmlNs) continue;
      if (attribute.ns.empty()) {
        diagnostics_.warnings.push_back(
            {element.line,
             "ignoring unqualified attribute '" + attribute.qname + "'"});
        continue;
      }
      if (attribute.ns == vocab::kRdf && IsSyntaxAttribute(attribute.local)) {
        continue;
      }
      if (attribute.ns == vocab::kRdf && attribute.local == "type") {
        Emit(subject, std::string(vocab::kRdfType),
             Term::MakeIri(Resolve(context, attribute.value, element.line)),
             element.line);
        continue;
      }
      Emit(subject, attribute.ns + attribute.local,
           Term::MakeLiteral(attribute.value, context.language), element.line);
    }
  }

  bool HasPropertyAttributes(const Element& element) const {
    for (const Attribute& attribute : element.attributes) {
      if (attribute.ns.empty() || attribute.ns == vocab::kXmlNs) continue;
      if (attribute.ns == vocab::kRdf && IsSyntaxAttribute(attribute.local)) {
        continue;
      }
      return true;
    }
    return false;
  }

  void PropertyElement(const Element& element, const Term& subject,
                       const Context& parent, int& li_counter) {
    const Context context = Inherit(parent, element);
    std::string predicate = element.ns + element.local;
    if (element.ns == vocab::kRdf && element.local == "li") {
      predicate = std::string(vocab::kRdf) + "_" + std::to_string(li_counter++);
    }
    if (element.FindAttribute(vocab::kRdf, "ID") != nullptr) {
      diagnostics_.warnings.push_back(
          {element.line, "statement reification via rdf:ID is not modeled"});
    }

    std::vector<const Element*> child_elements;
    std::string text;
    for (const xml::Node& child : element.children) {
      if (child.is_element()) {
        child_elements.push_back(child.element.get());
      } else {
        text += child.text;
      }
    }

    if (const Attribute* parse_type =
            element.FindAttribute(vocab::kRdf, "parseType")) {
      if (parse_type->value == "Resource") {
        const Term node = NewBlank();
        Emit(subject, predicate, node, element.line);
        int nested_li = 1;
        for (const Element* child : child_elements) {
          PropertyElement(*child, node, context, nested_li);
        }
        return;
      }
      if (parse_type->value == "Collection") {
        Term current = Term::MakeIri(std::string(vocab::kRdfNil));
        std::vector<Term> items;
        for (const Element* child : child_elements) {
          items.push_back(NodeElement(*child, context));
        }
        if (!items.empty()) current = NewBlank();
        Emit(subject, predicate, current, element.line);
        for (std::size_t i = 0; i < items.size(); ++i) {
          Emit(current, std::string(vocab::kRdfFirst), items[i], element.line);
          Term rest = i + 1 < items.size()
                          ? NewBlank()
                          : Term::MakeIri(std::string(vocab::kRdfNil));
          Emit(current, std::string(vocab::kRdfRest), rest, element.line);
          current = std::move(rest);
        }
        return;
      }
      // "Literal" and unknown parse types keep the markup verbatim.
      Emit(subject, predicate,
           Term::MakeLiteral(std::string(element.inner_source), {},
                             std::string(vocab::kRdfXmlLiteral)),
           element.line);
      return;
    }

    if (!child_elements.empty()) {
      if (child_elements.size() > 1) {
        throw SyntaxError(element.line, "property element <" + element.qname +
                                            "> has more than one node element");
      }
      if (!IsWhitespaceOnly(text)) {
        throw SyntaxError(element.line, "property element <" + element.qname +
                                            "> mixes text and elements");
      }
      const Term object = NodeElement(*child_elements.front(), context);
      Emit(subject, predicate, object, element.line);
      return;
    }

    const Attribute* resource = element.FindAttribute(vocab::kRdf, "resource");
    const Attribute* node_id = element.FindAttribute(vocab::kRdf, "nodeID");
    if (resource != nullptr || node_id != nullptr ||
        HasPropertyAttributes(element)) {
      if (!IsWhitespaceOnly(text)) {
        throw SyntaxError(element.line, "property element <" + element.qname +
                                            "> has both a resource and text");
      }
      Term object;
      if (resource != nullptr) {
        object = Term::MakeIri(Resolve(context, resource->value, element.line));
      } else if (node_id != nullptr) {
        object = Term::MakeBlank("u" + node_id->value);
      } else {
        object = NewBlank();
      }
      Emit(subject, predicate, object, element.line);
      PropertyAttributes(element, object, context);
      return;
    }

    std::string datatype;
    if (const Attribute* dt = element.FindAttribute(vocab::kRdf, "datatype")) {
      datatype = Resolve(context, dt->value, element.line);
    }
    Emit(subject, predicate,
         Term::MakeLiteral(std::move(text),
                           datatype.empty() ? context.language : std::string(),
                           std::move(datatype)),
         element.line);
  }

  ParseDiagnostics& diagnostics_;
  std::size_t counter_ = 0;
  std::vector<Triple> triples_;
};

}  // namespace

std::vector<Triple> ParseRdfXml(std::string_view text,
                                ParseDiagnostics& diagnostics) {
  const auto root = xml::Parse(text);
  return RdfXmlReader(diagnostics).Run(*root);
}

}  // namespace ontomatch::rdf
