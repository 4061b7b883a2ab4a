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

#ifndef ONTOMATCH_ONTOLOGY_H_
#define ONTOMATCH_ONTOLOGY_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/iri.h"

namespace ontomatch {

enum class EntityCategory {
  kOntologyClass,
  kObjectProperty,
  kDataProperty,
  kNamedIndividual,
};

inline constexpr std::array<EntityCategory, 4> kAllCategories = {
    EntityCategory::kOntologyClass, EntityCategory::kObjectProperty,
    EntityCategory::kDataProperty, EntityCategory::kNamedIndividual};

std::string_view CategoryName(EntityCategory category);

// An rdfs:label annotation. language is empty for untagged literals.
struct Label {
  std::string language;
  std::string text;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Entity {
  Iri iri;
  EntityCategory category;
  std::vector<Label> labels;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct SubclassAxiom {
  Iri child;
  Iri parent;

  friend bool operator==(const SubclassAxiom&, const SubclassAxiom&) = default;
  friend auto operator<=>(const SubclassAxiom&, const SubclassAxiom&) =
      default;
};

// A parsed ontology: named entities by category, their labels, the told
// subclass hierarchy between named classes, and axiom counts.
//
// Entities are keyed by IRI and iterate in IRI order. owl:Thing is never
// stored. Once built the value is not mutated, so concurrent readers are
// safe.
class Ontology {
 public:
  using EntityMap = std::map<Iri, Entity>;

  const std::optional<Iri>& ontology_iri() const { return ontology_iri_; }
  void set_ontology_iri(Iri iri) { ontology_iri_ = std::move(iri); }

  // Declares an entity. Redeclaring under the same category merges labels.
  // Returns false when the IRI is owl:Thing (ignored). Throws PunningError
  // when the IRI is already declared under another category.
  bool AddEntity(Entity entity);

  // Appends a label to a declared entity; duplicates are dropped. Returns
  // false when the IRI is not declared.
  bool AddLabel(const Iri& iri, Label label);

  // Records a told subclass axiom. Throws std::invalid_argument when the
  // child is declared with a category other than kOntologyClass.
  void AddSubclassAxiom(Iri child, Iri parent);

  // Throws std::invalid_argument when logical > total.
  void SetAxiomCounts(std::size_t total, std::size_t logical);

  const Entity* Lookup(const Iri& iri) const;
  std::size_t EntityCount(EntityCategory category) const;

  const EntityMap& entities() const { return entities_; }
  const std::vector<SubclassAxiom>& subclass_axioms() const {
    return subclass_axioms_;
  }
  std::size_t total_axiom_count() const { return total_axiom_count_; }
  std::size_t logical_axiom_count() const { return logical_axiom_count_; }

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::optional<Iri> ontology_iri_;
  EntityMap entities_;
  std::vector<SubclassAxiom> subclass_axioms_;
  std::array<std::size_t, 4> category_counts_{};
  std::size_t total_axiom_count_ = 0;
  std::size_t logical_axiom_count_ = 0;
};

}  // namespace ontomatch

#endif  // ONTOMATCH_ONTOLOGY_H_
