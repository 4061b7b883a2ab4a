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

#include "ontomatch/iri.h"

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace ontomatch {
namespace {

// Length of the scheme (without the colon), or 0 when absent.
std::size_t SchemeLength(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == ':') return i;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return 0;
  }
  return 0;
}

bool IsUrn(std::string_view s) {
  if (s.size() < 4) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != "urn"[i]) {
      return false;
    }
  }
  if (s[3] != ':') return false;
  const std::string_view rest = s.substr(4);
  const std::size_t colon = rest.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 32) {
    return false;
  }
  const std::string_view nid = rest.substr(0, colon);
  if (!std::isalnum(static_cast<unsigned char>(nid[0]))) return false;
  for (const char c : nid) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') return false;
  }
  return colon + 1 < rest.size();
}

struct IriParts {
  std::string scheme;
  bool has_authority = false;
  std::string authority;
  std::string path;
  bool has_query = false;
  std::string query;
  bool has_fragment = false;
  std::string fragment;
};

IriParts Split(std::string_view s) {
  IriParts parts;
  const std::size_t scheme_len = SchemeLength(s);
  if (scheme_len > 0) {
    parts.scheme = std::string(s.substr(0, scheme_len));
    s.remove_prefix(scheme_len + 1);
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const std::size_t end = s.find_first_of("/?#");
    parts.has_authority = true;
    parts.authority = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  const std::size_t hash = s.find('#');
  if (hash != std::string_view::npos) {
    parts.has_fragment = true;
    parts.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  const std::size_t question = s.find('?');
  if (question != std::string_view::npos) {
    parts.has_query = true;
    parts.query = std::string(s.substr(question + 1));
    s = s.substr(0, question);
  }
  parts.path = std::string(s);
  return parts;
}

std::string RemoveDotSegments(std::string_view input) {
  std::string output;
  std::string in(input);
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.erase(0, 3);
    } else if (in.starts_with("./")) {
      in.erase(0, 2);
    } else if (in.starts_with("/./")) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in.size() == 3 ? std::string("/") : in.substr(3);
      const std::size_t slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      const std::size_t start = in[0] == '/' ? 1 : 0;
      std::size_t next = in.find('/', start);
      if (next == std::string::npos) next = in.size();
      output.append(in, 0, next);
      in.erase(0, next);
    }
  }
  return output;
}

std::string MergePaths(const IriParts& base, const std::string& ref_path) {
  if (base.has_authority && base.path.empty()) return "/" + ref_path;
  const std::size_t slash = base.path.rfind('/');
  if (slash == std::string::npos) return ref_path;
  return base.path.substr(0, slash + 1) + ref_path;
}

std::string Recompose(const IriParts& p) {
  std::string out;
  if (!p.scheme.empty()) out += p.scheme + ":";
  if (p.has_authority) out += "//" + p.authority;
  out += p.path;
  if (p.has_query) out += "?" + p.query;
  if (p.has_fragment) out += "#" + p.fragment;
  return out;
}

}  // namespace

bool HasScheme(std::string_view reference) {
  return SchemeLength(reference) > 0;
}

bool IsAbsoluteIri(std::string_view value) {
  if (value.empty()) return false;
  for (const char c : value) {
    if (static_cast<unsigned char>(c) <= 0x20) return false;
  }
  const std::size_t scheme_len = SchemeLength(value);
  if (scheme_len == 0) return false;
  if (value.substr(scheme_len + 1).starts_with("//")) return true;
  return IsUrn(value);
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!IsAbsoluteIri(value_)) {
    throw std::invalid_argument("not an absolute IRI: '" + value_ + "'");
  }
}

std::optional<std::string> ResolveIri(std::string_view base,
                                      std::string_view reference) {
  IriParts ref = Split(reference);
  if (!ref.scheme.empty()) {
    ref.path = RemoveDotSegments(ref.path);
    return Recompose(ref);
  }
  if (base.empty() || !HasScheme(base)) return std::nullopt;
  const IriParts b = Split(base);
  IriParts target;
  target.scheme = b.scheme;
  if (ref.has_authority) {
    target.has_authority = true;
    target.authority = ref.authority;
    target.path = RemoveDotSegments(ref.path);
    target.has_query = ref.has_query;
    target.query = ref.query;
  } else {
    target.has_authority = b.has_authority;
    target.authority = b.authority;
    if (ref.path.empty()) {
      target.path = b.path;
      if (ref.has_query) {
        target.has_query = true;
        target.query = ref.query;
      } else {
        target.has_query = b.has_query;
        target.query = b.query;
      }
    } else {
      if (ref.path[0] == '/') {
        target.path = RemoveDotSegments(ref.path);
      } else {
        target.path = RemoveDotSegments(MergePaths(b, ref.path));
      }
      target.has_query = ref.has_query;
      target.query = ref.query;
    }
  }
  target.has_fragment = ref.has_fragment;
  target.fragment = ref.fragment;
  return Recompose(target);
}

}  // namespace ontomatch
