// Copyright 2026 The Latechunk Authors
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
#ifndef LATECHUNK_TESTS_UNIT_JATS_BUILDER_H_
#define LATECHUNK_TESTS_UNIT_JATS_BUILDER_H_

#include <string>
#include <vector>

#include "fmt/format.h"

namespace latechunk::testing {

struct SectionSpec {
  std::string title;
  std::vector<std::string> paragraphs;
};

// "w0 w1 ... w{n-1}." style filler with exactly n whitespace words.
inline std::string Words(size_t n, const std::string& stem = "word") {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += fmt::format("{}{}", stem, i);
  }
  return out;
}

inline std::string BuildJats(const std::string& id,
                             const std::vector<SectionSpec>& sections,
                             const std::string& abstract = "",
                             const std::string& back = "") {
  std::string xml = fmt::format(
      "<?xml version=\"1.0\"?>\n<article><front><article-meta>"
      "<article-id pub-id-type=\"pmc\">{}</article-id><title-group>"
      "<article-title>T</article-title></title-group>",
      id);
  if (!abstract.empty()) {
    xml += std::string("<abstract><p>") + abstract + "</p></abstract>";
  }
  xml += "</article-meta></front><body>";
  for (const SectionSpec& s : sections) {
    xml += std::string("<sec><title>") + s.title + "</title>";
    for (const std::string& p : s.paragraphs) {
      xml += std::string("<p>") + p + "</p>";
    }
    xml += "</sec>";
  }
  xml += "</body>";
  if (!back.empty()) xml += "<back>" + back + "</back>";
  xml += "</article>";
  return xml;
}

}  // namespace latechunk::testing

#endif  // LATECHUNK_TESTS_UNIT_JATS_BUILDER_H_
