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

// Turns a triple set into the ontology model and its axiom counts.
//
// Axiom counting: declarations, annotation assertions and logical axioms all
// count toward the total. Logical axioms are subclass, equivalence and
// disjointness axioms, property domain/range/hierarchy/characteristics,
// class assertions and property assertions.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/iri.h"
#include "ontomatch/vocab.h"
#include "rdf_graph.h"

namespace ontomatch::rdf {
namespace {

std::string Owl(std::string_view local) {
  return std::string(vocab::kOwl) + std::string(local);
}
std::string Rdfs(std::string_view local) {
  return std::string(vocab::kRdfs) + std::string(local);
}

std::optional<EntityCategory> DeclaredCategory(std::string_view type) {
  if (type == vocab::kOwlClass) return EntityCategory::kOntologyClass;
  if (type == vocab::kOwlObjectProperty) return EntityCategory::kObjectProperty;
  if (type == vocab::kOwlDatatypeProperty) return EntityCategory::kDataProperty;
  if (type == vocab::kOwlNamedIndividual) {
    return EntityCategory::kNamedIndividual;
  }
  return std::nullopt;
}

bool IsOtherDeclaration(std::string_view type) {
  return type == Owl("AnnotationProperty") || type == Rdfs("Datatype");
}

bool IsPropertyCharacteristic(std::string_view type) {
  static const std::set<std::string, std::less<>> kTypes = {
      Owl("FunctionalProperty"),  Owl("InverseFunctionalProperty"),
      Owl("TransitiveProperty"),  Owl("SymmetricProperty"),
      Owl("AsymmetricProperty"),  Owl("ReflexiveProperty"),
      Owl("IrreflexiveProperty"),
  };
  return kTypes.contains(type);
}

// Types that make a blank node an axiom in its own right.
bool IsBlankAxiomType(std::string_view type) {
  return type == Owl("AllDisjointClasses") || type == Owl("AllDifferent") ||
         type == Owl("AllDisjointProperties") ||
         type == Owl("NegativePropertyAssertion");
}

bool IsLogicalPredicate(std::string_view predicate) {
  static const std::set<std::string, std::less<>> kPredicates = {
      Owl("equivalentClass"),      Owl("disjointWith"),
      Owl("disjointUnionOf"),      Rdfs("domain"),
      Rdfs("range"),               Rdfs("subPropertyOf"),
      Owl("inverseOf"),            Owl("equivalentProperty"),
      Owl("propertyDisjointWith"), Owl("propertyChainAxiom"),
      Owl("hasKey"),               Owl("sameAs"),
      Owl("differentFrom"),
  };
  return kPredicates.contains(predicate);
}

bool IsBuiltinAnnotation(std::string_view predicate) {
  static const std::set<std::string, std::less<>> kPredicates = {
      Rdfs("comment"),          Rdfs("seeAlso"),
      Rdfs("isDefinedBy"),      Owl("versionInfo"),
      Owl("deprecated"),        Owl("priorVersion"),
      Owl("backwardCompatibleWith"), Owl("incompatibleWith"),
  };
  if (kPredicates.contains(predicate)) return true;
  return predicate.starts_with("http://purl.org/dc/elements/1.1/") ||
         predicate.starts_with("http://purl.org/dc/terms/") ||
         predicate.starts_with("http://www.w3.org/2004/02/skos/core#");
}

bool InReservedNamespace(std::string_view iri) {
  return iri.starts_with(vocab::kRdf) || iri.starts_with(vocab::kRdfs) ||
         iri.starts_with(vocab::kOwl) || iri.starts_with(vocab::kXsd);
}

std::string LowerAscii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class Builder {
 public:
  explicit Builder(ParseDiagnostics& diagnostics) : diagnostics_(diagnostics) {}

  Ontology Run(std::vector<Triple> triples) {
    Deduplicate(triples);
    for (const Triple& t : triples) Declarations(t);
    for (const Triple& t : triples) {
      if (!consumed_.contains(&t)) Statement(t);
    }
    ontology_.SetAxiomCounts(total_, logical_);
    return std::move(ontology_);
  }

 private:
  static void Deduplicate(std::vector<Triple>& triples) {
    std::set<std::tuple<Term, std::string, Term>> seen;
    std::vector<Triple> unique;
    unique.reserve(triples.size());
    for (Triple& t : triples) {
      if (seen.emplace(t.subject, t.predicate, t.object).second) {
        unique.push_back(std::move(t));
      }
    }
    triples = std::move(unique);
  }

  void Warn(std::size_t line, std::string message) {
    diagnostics_.warnings.push_back({line, std::move(message)});
  }

  void Skip(const Triple& t, bool warn) {
    ++diagnostics_.skipped_triples;
    if (warn && warned_predicates_.insert(t.predicate).second) {
      Warn(t.line, "skipping triples with unsupported predicate <" +
                       t.predicate + ">");
    }
  }

  std::optional<Iri> SubjectIri(const Triple& t) {
    if (!t.subject.is_iri()) return std::nullopt;
    if (!IsAbsoluteIri(t.subject.value)) {
      Warn(t.line, "ignoring subject <" + t.subject.value +
                       "> that is not an absolute IRI");
      return std::nullopt;
    }
    return Iri(t.subject.value);
  }

  void Declarations(const Triple& t) {
    if (t.predicate != vocab::kRdfType || !t.object.is_iri() ||
        !t.subject.is_iri()) {
      return;
    }
    const std::string& type = t.object.value;
    if (type == vocab::kOwlOntology) {
      consumed_.insert(&t);
      if (!ontology_.ontology_iri() && IsAbsoluteIri(t.subject.value)) {
        ontology_.set_ontology_iri(Iri(t.subject.value));
        ontology_subject_ = t.subject.value;
      } else if (ontology_.ontology_iri()) {
        Warn(t.line, "multiple owl:Ontology headers; keeping <" +
                         ontology_.ontology_iri()->str() + ">");
      }
      return;
    }
    if (type == Owl("AnnotationProperty")) {
      annotation_properties_.insert(t.subject.value);
      return;
    }
    const auto category = DeclaredCategory(type);
    if (!category) return;
    consumed_.insert(&t);
    const auto iri = SubjectIri(t);
    if (!iri) {
      ++diagnostics_.skipped_triples;
      return;
    }
    try {
      if (ontology_.AddEntity({*iri, *category, {}})) ++total_;
    } catch (const PunningError& e) {
      throw PunningError(t.line, e.iri(), e.what());
    }
  }

  void Statement(const Triple& t) {
    if (t.subject.is_blank()) {
      if (t.predicate == vocab::kRdfType && t.object.is_iri() &&
          IsBlankAxiomType(t.object.value)) {
        ++total_;
        ++logical_;
      } else {
        ++diagnostics_.skipped_triples;
      }
      return;
    }
    const auto subject = SubjectIri(t);
    if (!subject) {
      ++diagnostics_.skipped_triples;
      return;
    }

    if (t.subject.value == ontology_subject_) {
      if (t.predicate == vocab::kOwlImports) {
        Warn(t.line, "owl:imports <" + t.object.value + "> is not resolved");
      }
      return;  // ontology header annotations are not axioms
    }

    if (t.predicate == vocab::kRdfsLabel) {
      ++total_;
      if (t.object.is_literal()) {
        ontology_.AddLabel(*subject,
                           {LowerAscii(t.object.language), t.object.value});
      }
      return;
    }

    if (t.predicate == vocab::kRdfsSubClassOf) {
      SubClassOf(t, *subject);
      return;
    }

    if (t.predicate == vocab::kRdfType) {
      TypeStatement(t);
      return;
    }

    if (IsLogicalPredicate(t.predicate)) {
      ++total_;
      ++logical_;
      return;
    }

    if (IsAnnotationPredicate(t.predicate)) {
      ++total_;
      return;
    }

    if (IsAbsoluteIri(t.predicate)) {
      if (const Entity* p = ontology_.Lookup(Iri(t.predicate));
          p != nullptr && (p->category == EntityCategory::kObjectProperty ||
                           p->category == EntityCategory::kDataProperty)) {
        ++total_;
        ++logical_;
        return;
      }
    }
    Skip(t, true);
  }

  void SubClassOf(const Triple& t, const Iri& child) {
    if (t.object.is_literal()) {
      Warn(t.line, "rdfs:subClassOf with a literal object");
      ++diagnostics_.skipped_triples;
      return;
    }
    if (t.object.is_blank() || t.object.value == vocab::kOwlThing) {
      ++total_;
      ++logical_;
      return;
    }
    if (!IsAbsoluteIri(t.object.value)) {
      Warn(t.line, "rdfs:subClassOf parent <" + t.object.value +
                       "> is not an absolute IRI");
      ++diagnostics_.skipped_triples;
      return;
    }
    try {
      ontology_.AddSubclassAxiom(child, Iri(t.object.value));
    } catch (const std::invalid_argument& e) {
      Warn(t.line, e.what());
      ++diagnostics_.skipped_triples;
      return;
    }
    ++total_;
    ++logical_;
  }

  void TypeStatement(const Triple& t) {
    if (!t.object.is_iri()) {
      Skip(t, true);
      return;
    }
    const std::string& type = t.object.value;
    if (IsOtherDeclaration(type)) {
      ++total_;
      return;
    }
    if (IsPropertyCharacteristic(type)) {
      ++total_;
      ++logical_;
      return;
    }
    if (type == vocab::kOwlThing || !InReservedNamespace(type)) {
      // Class assertion on a named individual.
      ++total_;
      ++logical_;
      return;
    }
    ++diagnostics_.skipped_triples;
    if (warned_types_.insert(type).second) {
      Warn(t.line, "skipping rdf:type <" + type + ">");
    }
  }

  bool IsAnnotationPredicate(const std::string& predicate) const {
    return IsBuiltinAnnotation(predicate) ||
           annotation_properties_.contains(predicate);
  }

  ParseDiagnostics& diagnostics_;
  Ontology ontology_;
  std::size_t total_ = 0;
  std::size_t logical_ = 0;
  std::string ontology_subject_;
  std::unordered_set<const Triple*> consumed_;
  std::set<std::string> warned_predicates_;
  std::set<std::string> warned_types_;
  std::set<std::string> annotation_properties_;
};

}  // namespace

Ontology BuildOntology(std::vector<Triple> triples,
                       ParseDiagnostics& diagnostics) {
  return Builder(diagnostics).Run(std::move(triples));
}

}  // namespace ontomatch::rdf
