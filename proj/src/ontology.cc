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

#include "ontomatch/ontology.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ontomatch/errors.h"
#include "ontomatch/vocab.h"

namespace ontomatch {

std::string_view CategoryName(EntityCategory category) {
  switch (category) {
    case EntityCategory::kOntologyClass:
      return "class";
    case EntityCategory::kObjectProperty:
      return "object property";
    case EntityCategory::kDataProperty:
      return "data property";
    case EntityCategory::kNamedIndividual:
      return "named individual";
  }
  return "unknown";
}

bool Ontology::AddEntity(Entity entity) {
  if (entity.iri.str() == vocab::kOwlThing) return false;
  auto it = entities_.find(entity.iri);
  if (it == entities_.end()) {
    ++category_counts_[static_cast<std::size_t>(entity.category)];
    Iri key = entity.iri;
    entities_.emplace(std::move(key), std::move(entity));
    return true;
  }
  if (it->second.category != entity.category) {
    throw PunningError(0, entity.iri.str(),
                       "IRI " + entity.iri.str() + " declared as both " +
                           std::string(CategoryName(it->second.category)) +
                           " and " +
                           std::string(CategoryName(entity.category)));
  }
  for (Label& label : entity.labels) AddLabel(entity.iri, std::move(label));
  return true;
}

bool Ontology::AddLabel(const Iri& iri, Label label) {
  auto it = entities_.find(iri);
  if (it == entities_.end()) return false;
  auto& labels = it->second.labels;
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
    labels.push_back(std::move(label));
  }
  return true;
}

void Ontology::AddSubclassAxiom(Iri child, Iri parent) {
  if (const Entity* e = Lookup(child);
      e != nullptr && e->category != EntityCategory::kOntologyClass) {
    throw std::invalid_argument("subclass axiom on non-class " + child.str());
  }
  subclass_axioms_.push_back({std::move(child), std::move(parent)});
}

void Ontology::SetAxiomCounts(std::size_t total, std::size_t logical) {
  if (logical > total) {
    throw std::invalid_argument("logical axiom count exceeds total");
  }
  total_axiom_count_ = total;
  logical_axiom_count_ = logical;
}

const Entity* Ontology::Lookup(const Iri& iri) const {
  auto it = entities_.find(iri);
  return it == entities_.end() ? nullptr : &it->second;
}

std::size_t Ontology::EntityCount(EntityCategory category) const {
  return category_counts_[static_cast<std::size_t>(category)];
}

}  // namespace ontomatch
