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

#ifndef LATECHUNK_SYNTH_CORPUS_H_
#define LATECHUNK_SYNTH_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace latechunk::synth {

// Generated multi-section articles over a seeded topic vocabulary. Every
// section of an article draws its words from a single topic; topics recur
// across articles. Each article also carries its own entities: a method
// named only in its Methods section, a marker named only in Results and a
// target named only in the Introduction, plus an author cited only from the
// Discussion. Shared disease and drug concepts link the articles through
// the concept graph.
struct SynthOptions {
  size_t documents = 60;
  uint64_t seed = 2026;
  size_t topics = 18;
  size_t topic_words = 40;
  size_t concept_dim = 16;
  // Share of sentence words drawn from a small corpus-wide stopword list.
  double function_word_rate = 0.3;
  // Per-sentence chance of naming the section's own entity.
  double method_rate = 0.6;
  double marker_rate = 0.5;
  double target_rate = 0.4;
  // When nonzero, Methods, Results and Discussion open with an entity-free
  // paragraph of at least this many words.
  size_t lead_in_words = 0;
};

struct SynthArticle {
  std::string file_name;  // "<id>.xml"
  std::string doc_id;
  std::string xml;
};

struct SynthCorpus {
  std::vector<SynthArticle> articles;
  std::string concepts_tsv;
  std::string dictionary_tsv;
};

inline constexpr const char* kSynthSectionTitles[] = {
    "Introduction", "Materials and Methods", "Results",
    "Discussion",   "Limitations",           "Conclusions"};

SynthCorpus GenerateCorpus(const SynthOptions& options = {});

// Writes articles under dir/articles/ and the concept graph and dictionary
// as dir/concepts.tsv and dir/dictionary.tsv.
absl::Status WriteCorpus(const SynthCorpus& corpus, const std::string& dir);

}  // namespace latechunk::synth

#endif  // LATECHUNK_SYNTH_CORPUS_H_
