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

#ifndef ONTOMATCH_ERRORS_H_
#define ONTOMATCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontomatch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. line() is 1-based, 0 when unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The same IRI was declared under two entity categories.
class PunningError : public Error {
 public:
  PunningError(std::size_t line, const std::string& iri,
               const std::string& message)
      : Error(message), line_(line), iri_(iri) {}
  std::size_t line() const { return line_; }
  const std::string& iri() const { return iri_; }

 private:
  std::size_t line_;
  std::string iri_;
};

// Neither RDF/XML nor Turtle could be recognized.
class UnrecognizedFormat : public Error {
 public:
  using Error::Error;
};

// A matching run was requested over an ontology with no in-scope entities.
class EmptyOntology : public Error {
 public:
  using Error::Error;
};

// Malformed alignment or lexicon file.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ontomatch

#endif  // ONTOMATCH_ERRORS_H_
