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

#ifndef ONTOMATCH_METRICS_H_
#define ONTOMATCH_METRICS_H_

#include <cstddef>

#include "ontomatch/ontology.h"

namespace ontomatch {

// Schema size and richness metrics.
//
//   attribute richness   = data properties / classes
//   inheritance richness = subclass axioms / classes
//   relation richness    = object properties /
//                          (subclass axioms + object properties)
//
// A ratio with a zero denominator is reported as 0 and flagged.
struct MetricsReport {
  std::size_t axioms = 0;
  std::size_t logical_axioms = 0;
  std::size_t class_count = 0;
  std::size_t object_property_count = 0;
  std::size_t data_property_count = 0;
  std::size_t subclass_axiom_count = 0;
  double attribute_richness = 0.0;
  double inheritance_richness = 0.0;
  double relation_richness = 0.0;
  // True when class_count == 0 (attribute and inheritance richness).
  bool no_classes = false;
  // True when subclass axioms + object properties == 0.
  bool no_relations = false;
};

MetricsReport ComputeMetrics(const Ontology& ontology);

}  // namespace ontomatch

#endif  // ONTOMATCH_METRICS_H_
