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
#ifndef LATECHUNK_UTIL_TEXT_H_
#define LATECHUNK_UTIL_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace latechunk {

struct RawToken {
  std::string text;
  size_t offset = 0;  // byte offset into the tokenized string
};

// Splits on Unicode whitespace, then peels leading and trailing punctuation
// off each word; every peeled character becomes its own token.
std::vector<RawToken> Tokenize(std::string_view text);

// Number of whitespace-delimited words.
size_t CountWords(std::string_view text);

// Collapses runs of Unicode whitespace to one ASCII space and trims.
std::string CollapseWhitespace(std::string_view text);

// ASCII lowercase; non-ASCII bytes pass through.
std::string AsciiLower(std::string_view text);

// Lowercases and removes punctuation characters. Used for dictionary terms
// and the matching side of the token stream.
std::string NormalizeWord(std::string_view word);

// NormalizeWord on every whitespace-separated word, dropping empties, joined
// by single spaces.
std::string NormalizeTerm(std::string_view term);

// True if the token consists only of punctuation code points.
bool IsPunctuationToken(std::string_view token);

// Length in bytes of the UTF-8 sequence starting at text[pos] if it encodes a
// whitespace code point, else 0.
size_t WhitespaceLength(std::string_view text, size_t pos);

// Length in bytes of the UTF-8 sequence starting at text[pos] if it encodes a
// punctuation code point, else 0.
size_t PunctuationLength(std::string_view text, size_t pos);

}  // namespace latechunk

#endif  // LATECHUNK_UTIL_TEXT_H_
