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

#include "ontomatch/metrics.h"

namespace ontomatch {

MetricsReport ComputeMetrics(const Ontology& ontology) {
  MetricsReport report;
  report.axioms = ontology.total_axiom_count();
  report.logical_axioms = ontology.logical_axiom_count();
  report.class_count = ontology.EntityCount(EntityCategory::kOntologyClass);
  report.object_property_count =
      ontology.EntityCount(EntityCategory::kObjectProperty);
  report.data_property_count =
      ontology.EntityCount(EntityCategory::kDataProperty);
  report.subclass_axiom_count = ontology.subclass_axioms().size();

  const auto classes = static_cast<double>(report.class_count);
  report.no_classes = report.class_count == 0;
  if (!report.no_classes) {
    report.attribute_richness =
        static_cast<double>(report.data_property_count) / classes;
    report.inheritance_richness =
        static_cast<double>(report.subclass_axiom_count) / classes;
  }
  const std::size_t relations =
      report.subclass_axiom_count + report.object_property_count;
  report.no_relations = relations == 0;
  if (!report.no_relations) {
    report.relation_richness =
        static_cast<double>(report.object_property_count) /
        static_cast<double>(relations);
  }
  return report;
}

}  // namespace ontomatch
