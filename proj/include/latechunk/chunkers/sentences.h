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
#ifndef LATECHUNK_CHUNKERS_SENTENCES_H_
#define LATECHUNK_CHUNKERS_SENTENCES_H_

#include <span>
#include <string>
#include <vector>

#include "latechunk/docgraph/document.h"

namespace latechunk::chunkers {

// Sentence spans partitioning [0, n). A sentence ends after a '.', '?' or '!'
// token that is followed by whitespace and a token starting with an
// uppercase letter, unless the preceding token is a known abbreviation or a
// single letter. Paragraph starts always open a new sentence.
std::vector<docgraph::TokenSpan> SegmentSentences(const docgraph::Document& doc);

// Same rule over a bare token stream; offsets are byte offsets into the
// source text and decide whether whitespace separates two tokens.
std::vector<docgraph::TokenSpan> SegmentSentences(
    std::span<const std::string> tokens, std::span<const size_t> offsets);

bool IsAbbreviation(std::string_view token);

}  // namespace latechunk::chunkers

#endif  // LATECHUNK_CHUNKERS_SENTENCES_H_
