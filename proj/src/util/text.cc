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
#include "latechunk/util/text.h"

#include <array>
#include <span>
#include <cctype>
#include <string_view>

namespace latechunk {
namespace {

// Multi-byte whitespace: U+0085, U+00A0, U+1680, U+2000..U+200A, U+2028,
// U+2029, U+202F, U+205F, U+3000.
constexpr std::array<std::string_view, 19> kUnicodeSpaces = {
    "\xC2\x85",     "\xC2\xA0",     "\xE1\x9A\x80", "\xE2\x80\x80",
    "\xE2\x80\x81", "\xE2\x80\x82", "\xE2\x80\x83", "\xE2\x80\x84",
    "\xE2\x80\x85", "\xE2\x80\x86", "\xE2\x80\x87", "\xE2\x80\x88",
    "\xE2\x80\x89", "\xE2\x80\x8A", "\xE2\x80\xA8", "\xE2\x80\xA9",
    "\xE2\x80\xAF", "\xE2\x81\x9F", "\xE3\x80\x80"};

// Common non-ASCII punctuation: dashes, curly quotes, ellipsis, bullets,
// guillemets, middle dot, degree and section signs.
constexpr std::array<std::string_view, 18> kUnicodePunct = {
    "\xE2\x80\x90", "\xE2\x80\x91", "\xE2\x80\x92", "\xE2\x80\x93",
    "\xE2\x80\x94", "\xE2\x80\x95", "\xE2\x80\x98", "\xE2\x80\x99",
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\xA2", "\xE2\x80\xA6",
    "\xC2\xAB",     "\xC2\xBB",     "\xC2\xB7",     "\xC2\xB0",
    "\xC2\xA7",     "\xE2\x80\xB2"};

size_t MatchAny(std::string_view text, size_t pos,
                std::span<const std::string_view> table) {
  const std::string_view rest = text.substr(pos);
  for (std::string_view entry : table) {
    if (rest.starts_with(entry)) return entry.size();
  }
  return 0;
}

}  // namespace

size_t WhitespaceLength(std::string_view text, size_t pos) {
  const unsigned char c = text[pos];
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
      c == '\f') {
    return 1;
  }
  if (c < 0x80) return 0;
  return MatchAny(text, pos, kUnicodeSpaces);
}

size_t PunctuationLength(std::string_view text, size_t pos) {
  const unsigned char c = text[pos];
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  return MatchAny(text, pos, kUnicodePunct);
}

std::vector<RawToken> Tokenize(std::string_view text) {
  std::vector<RawToken> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    if (size_t ws = WhitespaceLength(text, pos); ws > 0) {
      pos += ws;
      continue;
    }
    size_t end = pos;
    while (end < text.size() && WhitespaceLength(text, end) == 0) ++end;

    // Leading punctuation.
    size_t begin = pos;
    while (begin < end) {
      const size_t n = PunctuationLength(text, begin);
      if (n == 0) break;
      tokens.push_back({std::string(text.substr(begin, n)), begin});
      begin += n;
    }
    // Trailing punctuation, collected right to left.
    std::vector<RawToken> trailing;
    size_t stop = end;
    while (stop > begin) {
      // Find the start of the last code point.
      size_t cp = stop - 1;
      while (cp > begin &&
             (static_cast<unsigned char>(text[cp]) & 0xC0) == 0x80) {
        --cp;
      }
      const size_t n = PunctuationLength(text, cp);
      if (n == 0 || cp + n != stop) break;
      trailing.push_back({std::string(text.substr(cp, n)), cp});
      stop = cp;
    }
    if (stop > begin) {
      tokens.push_back({std::string(text.substr(begin, stop - begin)), begin});
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      tokens.push_back(std::move(*it));
    }
    pos = end;
  }
  return tokens;
}

size_t CountWords(std::string_view text) {
  size_t count = 0;
  bool in_word = false;
  size_t pos = 0;
  while (pos < text.size()) {
    if (size_t ws = WhitespaceLength(text, pos); ws > 0) {
      in_word = false;
      pos += ws;
      continue;
    }
    if (!in_word) ++count;
    in_word = true;
    ++pos;
  }
  return count;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  size_t pos = 0;
  while (pos < text.size()) {
    if (size_t ws = WhitespaceLength(text, pos); ws > 0) {
      pending_space = !out.empty();
      pos += ws;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(text[pos++]);
  }
  return out;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string NormalizeWord(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  size_t pos = 0;
  while (pos < word.size()) {
    if (size_t n = PunctuationLength(word, pos); n > 0) {
      pos += n;
      continue;
    }
    out.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(word[pos]))));
    ++pos;
  }
  return out;
}

std::string NormalizeTerm(std::string_view term) {
  std::string out;
  for (const RawToken& word : Tokenize(term)) {
    std::string norm = NormalizeWord(word.text);
    if (norm.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += norm;
  }
  return out;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  size_t pos = 0;
  while (pos < token.size()) {
    const size_t n = PunctuationLength(token, pos);
    if (n == 0) return false;
    pos += n;
  }
  return true;
}

}  // namespace latechunk
