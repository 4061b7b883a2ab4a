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

#ifndef ONTOMATCH_ALIGNMENT_IO_H_
#define ONTOMATCH_ALIGNMENT_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "ontomatch/evaluation.h"
#include "ontomatch/matcher.h"

namespace ontomatch {

// Header "source_iri\ttarget_iri\trelation\tscore", one correspondence per
// LF-terminated row, scores with four decimals, rows in alignment order.
void WriteAlignmentTsv(const Alignment& alignment, std::ostream& out);

// {"source", "target", "alpha", "correspondences": [{source, target,
// relation, score}]} with scores printed to four decimals.
void WriteAlignmentJson(const Alignment& alignment, std::ostream& out);

std::string FormatScore(double score);

// Reads the IRI pairs of an alignment. Accepts the TSV shape (a header
// naming at least source_iri and target_iri; extra relation/score columns
// allowed) or, when the first non-blank character is '{', the JSON shape.
// Duplicate pairs collapse. Throws FormatError with a 1-based line number.
ReferenceAlignment ReadAlignment(std::istream& in);
ReferenceAlignment ReadAlignmentFile(const std::filesystem::path& path);

}  // namespace ontomatch

#endif  // ONTOMATCH_ALIGNMENT_IO_H_
