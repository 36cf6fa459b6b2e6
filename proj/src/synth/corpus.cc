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

#include "latechunk/synth/corpus.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "fmt/format.h"
#include "latechunk/embed/deterministic_embedder.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/util/status.h"
#include "latechunk/util/text.h"

namespace latechunk::synth {
namespace {

constexpr const char* kFunctionWords[] = {"the", "of",   "and", "in",
                                          "was", "with", "for", "by",
                                          "on",  "a",    "to",  "from"};

// Article-specific entities and the shared concepts it mentions.
struct ArticlePlan {
  std::string id;
  std::vector<size_t> topics;  // one per section
  std::string method;          // Methods only
  std::string marker;          // Results only
  std::string target;          // Introduction only
  std::string author;          // cited from the Discussion only
  size_t disease = 0;
  size_t drug = 0;
};

class Generator {
 public:
  explicit Generator(const SynthOptions& options)
      : options_(options), rng_(options.seed) {}

  SynthCorpus Run();

 private:
  size_t Pick(size_t n) { return static_cast<size_t>(rng_() % n); }
  bool Chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  // Lowercase pronounceable word that was never handed out before.
  std::string FreshWord();

  std::string Sentence(size_t topic, const std::vector<std::string>& inserts);
  std::string Paragraph(size_t topic, size_t sentences,
                        const std::vector<std::pair<std::string, double>>& mix,
                        const std::string& tail = "");
  std::string Article(const ArticlePlan& plan);

  SynthOptions options_;
  std::mt19937_64 rng_;
  std::set<std::string> used_;
  std::vector<std::vector<std::string>> topics_;
  std::vector<std::string> diseases_;
  std::vector<std::string> drugs_;
  std::vector<std::string> shared_authors_;
};

std::string Generator::FreshWord() {
  static constexpr char kConsonants[] = "bdfgklmnprstvz";
  static constexpr char kVowels[] = "aeiou";
  while (true) {
    std::string w;
    size_t syllables = 2 + Pick(2);
    for (size_t s = 0; s < syllables; ++s) {
      w += kConsonants[Pick(sizeof(kConsonants) - 1)];
      w += kVowels[Pick(sizeof(kVowels) - 1)];
    }
    if (Chance(0.5)) w += kConsonants[Pick(sizeof(kConsonants) - 1)];
    if (used_.insert(w).second) return w;
  }
}

std::string Capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = w[0] - 'a' + 'A';
  return w;
}

std::string Generator::Sentence(size_t topic,
                                const std::vector<std::string>& inserts) {
  size_t words = 14 + Pick(7);
  std::vector<std::string> out;
  for (size_t i = 0; i < words; ++i) {
    if (Chance(options_.function_word_rate)) {
      out.push_back(kFunctionWords[Pick(std::size(kFunctionWords))]);
    } else {
      const auto& vocab = topics_[topic];
      out.push_back(vocab[Pick(vocab.size())]);
    }
  }
  for (const std::string& ins : inserts) {
    out.insert(out.begin() + 1 + Pick(out.size() - 1), ins);
  }
  out[0] = Capitalize(out[0]);
  std::string s;
  for (const std::string& w : out) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s + ".";
}

std::string Generator::Paragraph(
    size_t topic, size_t sentences,
    const std::vector<std::pair<std::string, double>>& mix,
    const std::string& tail) {
  std::string p;
  for (size_t i = 0; i < sentences; ++i) {
    std::vector<std::string> inserts;
    for (const auto& [term, rate] : mix) {
      if (Chance(rate)) inserts.push_back(term);
    }
    if (!p.empty()) p += ' ';
    p += Sentence(topic, inserts);
  }
  if (!tail.empty()) p += " " + tail;
  return p;
}

std::string Generator::Article(const ArticlePlan& plan) {
  const std::string& disease = diseases_[plan.disease];
  const std::string& drug = drugs_[plan.drug];
  std::string body;
  auto section = [&](const char* title, const std::vector<std::string>& paras) {
    body += fmt::format("<sec><title>{}</title>", title);
    for (const std::string& p : paras) body += "<p>" + p + "</p>";
    body += "</sec>";
  };
  const auto& t = plan.topics;
  section("Introduction",
          {Paragraph(t[0], 8, {{plan.target, options_.target_rate}, {disease, 0.15}},
                     "Prior reports <xref ref-type=\"bibr\" rid=\"B2\">2</xref> "
                     "exist."),
           Paragraph(t[0], 8, {{plan.target, options_.target_rate}}),
           Paragraph(t[0], 7, {{plan.target, options_.target_rate}},
                     fmt::format("We hypothesized that {} modulates {} "
                                 "progression.",
                                 plan.target, disease))});
  auto lead = [&](size_t topic, std::vector<std::string> paras) {
    if (options_.lead_in_words > 0) {
      std::string p;
      while (CountWords(p) < options_.lead_in_words) {
        p += (p.empty() ? "" : " ") + Sentence(topic, {});
      }
      paras.insert(paras.begin(), p);
    }
    return paras;
  };
  section("Materials and Methods",
          lead(t[1], {Paragraph(t[1], 8, {{plan.method, options_.method_rate}}),
           Paragraph(t[1], 8, {{plan.method, options_.method_rate}}),
           Paragraph(t[1], 8, {{plan.method, options_.method_rate}})}));
  section("Results", lead(t[2], {Paragraph(t[2], 8, {{plan.marker, options_.marker_rate}, {drug, 0.15}}),
                      Paragraph(t[2], 8, {{plan.marker, options_.marker_rate}}),
                      Paragraph(t[2], 8, {{plan.marker, options_.marker_rate}, {drug, 0.15}})}));
  std::string cite = fmt::format(
      "These findings agree with {} and colleagues "
      "<xref ref-type=\"bibr\" rid=\"B1\">1</xref>.",
      Capitalize(plan.author));
  section("Discussion", lead(t[3], {Paragraph(t[3], 7, {{disease, 0.1}}, cite),
                                    Paragraph(t[3], 7, {}, cite),
                                    Paragraph(t[3], 7, {{disease, 0.1}}, cite)}));
  section("Limitations", {Paragraph(t[4], 8, {}), Paragraph(t[4], 8, {})});
  section("Conclusions", {Paragraph(t[5], 8, {{disease, 0.2}}),
                          Paragraph(t[5], 8, {{drug, 0.1}})});

  const std::string& other = shared_authors_[Pick(shared_authors_.size())];
  std::string refs = fmt::format(
      "<ref-list><ref id=\"B1\"><element-citation><person-group>"
      "<name><surname>{}</surname></name><name><surname>{}</surname></name>"
      "</person-group><year>{}</year></element-citation></ref>"
      "<ref id=\"B2\"><element-citation><person-group><name><surname>{}"
      "</surname></name></person-group><year>{}</year></element-citation>"
      "</ref></ref-list>",
      Capitalize(plan.author), Capitalize(other), 2000 + Pick(24),
      Capitalize(other), 2000 + Pick(24));
  std::string abstract = Paragraph(t[0], 2, {{disease, 0.5}});
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<article><front><article-meta>"
      "<article-id pub-id-type=\"pmc\">{}</article-id>"
      "<title-group><article-title>Synthetic study {}</article-title>"
      "</title-group><abstract><p>{}</p></abstract></article-meta></front>"
      "<body>{}</body><back>{}</back></article>\n",
      plan.id, plan.id, abstract, body, refs);
}

SynthCorpus Generator::Run() {
  topics_.resize(options_.topics);
  for (auto& vocab : topics_) {
    for (size_t i = 0; i < options_.topic_words; ++i) vocab.push_back(FreshWord());
  }
  for (int i = 0; i < 8; ++i) diseases_.push_back(FreshWord() + " syndrome");
  for (int i = 0; i < 8; ++i) drugs_.push_back(FreshWord() + "mab");
  for (int i = 0; i < 6; ++i) shared_authors_.push_back(FreshWord());

  std::vector<kg::Concept> concepts;
  std::vector<kg::Relation> relations;
  auto add_concept = [&](std::string cui, std::string name, std::string type) {
    std::vector<double> e = embed::HashedUnitVector(cui, options_.concept_dim,
                                                    options_.seed);
    concepts.push_back({cui, std::move(name), {}, {std::move(type)}, e});
  };
  for (size_t i = 0; i < diseases_.size(); ++i) {
    add_concept(fmt::format("C4{:05d}", i), diseases_[i], "T047");
  }
  for (size_t i = 0; i < drugs_.size(); ++i) {
    add_concept(fmt::format("C5{:05d}", i), drugs_[i], "T121");
    relations.push_back({fmt::format("C5{:05d}", i), "may_treat",
                         fmt::format("C4{:05d}", i % diseases_.size())});
  }

  SynthCorpus corpus;
  for (size_t d = 0; d < options_.documents; ++d) {
    ArticlePlan plan;
    plan.id = fmt::format("SYN{:04d}", d);
    std::vector<size_t> pool(options_.topics);
    for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    for (size_t s = 0; s < std::size(kSynthSectionTitles); ++s) {
      size_t j = s + Pick(pool.size() - s);
      std::swap(pool[s], pool[j]);
      plan.topics.push_back(pool[s]);
    }
    plan.method = FreshWord() + " " + FreshWord();
    plan.marker = FreshWord() + " " + FreshWord();
    plan.target = FreshWord() + " " + FreshWord();
    plan.author = FreshWord();
    plan.disease = Pick(diseases_.size());
    plan.drug = Pick(drugs_.size());

    std::string m = fmt::format("C1{:05d}", d);
    std::string y = fmt::format("C2{:05d}", d);
    std::string z = fmt::format("C3{:05d}", d);
    std::string dz = fmt::format("C4{:05d}", plan.disease);
    add_concept(m, plan.method, "T059");
    add_concept(y, plan.marker, "T201");
    add_concept(z, plan.target, "T116");
    relations.push_back({m, "measures", y});
    relations.push_back({y, "associated_with", dz});
    relations.push_back({z, "involved_in", dz});

    corpus.articles.push_back({plan.id + ".xml", plan.id, Article(plan)});
  }
  auto graph = kg::ConceptGraph::Create(std::move(concepts), std::move(relations));
  // Generated names are unique and every relation endpoint exists.
  if (graph.ok()) {
    corpus.concepts_tsv = kg::FormatConceptGraph(*graph);
    corpus.dictionary_tsv = kg::FormatDictionary(kg::DictionaryFromGraph(*graph));
  }
  return corpus;
}

}  // namespace

SynthCorpus GenerateCorpus(const SynthOptions& options) {
  return Generator(options).Run();
}

absl::Status WriteCorpus(const SynthCorpus& corpus, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "articles", ec);
  if (ec) {
    return MakeError(ErrorKind::kIo,
                     fmt::format("cannot create {}: {}", dir, ec.message()));
  }
  auto write = [](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return out.good() ? absl::OkStatus()
                      : MakeError(ErrorKind::kIo, "cannot write " + path.string());
  };
  for (const SynthArticle& a : corpus.articles) {
    LC_RETURN_IF_ERROR(write(fs::path(dir) / "articles" / a.file_name, a.xml));
  }
  LC_RETURN_IF_ERROR(write(fs::path(dir) / "concepts.tsv", corpus.concepts_tsv));
  LC_RETURN_IF_ERROR(
      write(fs::path(dir) / "dictionary.tsv", corpus.dictionary_tsv));
  return absl::OkStatus();
}

}  // namespace latechunk::synth
