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

#include "latechunk/pipeline/config.h"

#include <string>

#include "gtest/gtest.h"
#include "latechunk/util/status.h"
#include "unit/temp_dir.h"

namespace latechunk::pipeline {
namespace {

using testing::TempDir;

class ConfigTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::filesystem::create_directories(dir_.Sub("articles"));
    dir_.Write("concepts.tsv", "");
    dir_.Write("dictionary.tsv", "");
  }

  absl::StatusOr<PipelineConfig> Parse(const std::string& body) {
    return ParseConfig(body, dir_.path());
  }

  static constexpr const char* kBase =
      R"("corpus_dir": "articles", "concept_graph": "concepts.tsv",
         "dictionary": "dictionary.tsv")";

  std::string With(const std::string& extra) {
    return std::string("{") + kBase + (extra.empty() ? "" : ", " + extra) + "}";
  }

  TempDir dir_;
};

TEST_F(ConfigTest, DefaultsMatchTheReferenceSettings) {
  absl::StatusOr<PipelineConfig> c = Parse(With(""));
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->strategies.size(), 6u);
  EXPECT_EQ(c->conditions.size(), 3u);
  EXPECT_DOUBLE_EQ(c->beta, 0.7);
  EXPECT_DOUBLE_EQ(c->lambda, 0.1);
  EXPECT_EQ(c->naive_size, 256u);
  EXPECT_EQ(c->naive_overlap, 32u);
  EXPECT_DOUBLE_EQ(c->semantic_threshold, 0.75);
  EXPECT_DOUBLE_EQ(c->boundary.alpha_struct, 0.5);
  EXPECT_DOUBLE_EQ(c->boundary.alpha_sem, 0.3);
  EXPECT_DOUBLE_EQ(c->boundary.alpha_entity, 1.0);
  EXPECT_EQ(c->max_k(), 20u);
  EXPECT_EQ(c->corpus_dir, dir_.Sub("articles"));
}

TEST_F(ConfigTest, UnknownKeysAreRejectedAtEveryLevel) {
  for (const std::string& extra :
       {std::string(R"("bogus": 1)"),
        std::string(R"("provider": {"kind": "deterministic", "dmi": 4})"),
        std::string(R"("boundary": {"alpha": 1})"),
        std::string(R"("encoder": {"windw": 10})")}) {
    absl::StatusOr<PipelineConfig> c = Parse(With(extra));
    EXPECT_TRUE(HasErrorKind(c.status(), ErrorKind::kInvalidConfig)) << extra;
  }
}

TEST_F(ConfigTest, PathsMustExist) {
  absl::StatusOr<PipelineConfig> c =
      Parse(R"({"corpus_dir": "nowhere", "strategies": ["naive"]})");
  EXPECT_TRUE(HasErrorKind(c.status(), ErrorKind::kInvalidConfig));
  c = Parse(With(R"("gat_params": "missing.json")"));
  EXPECT_TRUE(HasErrorKind(c.status(), ErrorKind::kInvalidConfig));
}

TEST_F(ConfigTest, KgStrategiesNeedGraphAndDictionary) {
  absl::StatusOr<PipelineConfig> c =
      Parse(R"({"corpus_dir": "articles", "strategies": ["gralc_kg"]})");
  EXPECT_TRUE(HasErrorKind(c.status(), ErrorKind::kInvalidConfig));
  c = Parse(R"({"corpus_dir": "articles", "strategies": ["naive", "late"]})");
  EXPECT_TRUE(c.ok()) << c.status();
}

TEST_F(ConfigTest, RangeChecks) {
  for (const std::string& extra :
       {std::string(R"("beta": 1.5)"), std::string(R"("beta": -0.1)"),
        std::string(R"("naive_size": 32, "naive_overlap": 32)"),
        std::string(R"("strategies": ["nope"])"),
        std::string(R"("conditions": ["methods"])"),
        std::string(R"("provider": {"kind": "cloud"})"),
        std::string(R"("ks": [])")}) {
    EXPECT_TRUE(HasErrorKind(Parse(With(extra)).status(),
                             ErrorKind::kInvalidConfig))
        << extra;
  }
}

TEST_F(ConfigTest, MalformedJsonIsInvalidConfig) {
  EXPECT_TRUE(
      HasErrorKind(Parse("{\"corpus_dir\": ").status(), ErrorKind::kInvalidConfig));
  EXPECT_TRUE(HasErrorKind(Parse("[]").status(), ErrorKind::kInvalidConfig));
}

TEST_F(ConfigTest, HashIgnoresOutputAndWorkers) {
  PipelineConfig a = *Parse(With(R"("workers": 1, "out_dir": "a")"));
  PipelineConfig b = *Parse(With(R"("workers": 4, "out_dir": "b")"));
  PipelineConfig c = *Parse(With(R"("beta": 0.5)"));
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  EXPECT_NE(ConfigHash(a), ConfigHash(c));
  EXPECT_EQ(CanonicalConfig(a), CanonicalConfig(b));
}

TEST_F(ConfigTest, LoadResolvesRelativeToTheFile) {
  std::string path = dir_.Write("cfg/config.json",
                                R"({"corpus_dir": "../articles",
                                    "strategies": ["naive"]})");
  absl::StatusOr<PipelineConfig> c = LoadConfig(path);
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_TRUE(std::filesystem::equivalent(c->corpus_dir, dir_.Sub("articles")));
}

TEST(StrategyNameTest, RoundTrip) {
  for (Strategy s : kAllStrategies) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_FALSE(ParseStrategy("gralc").has_value());
}

TEST(MakeProviderTest, RemoteNeedsEndpoint) {
  PipelineConfig c;
  c.provider.kind = ProviderConfig::Kind::kRemote;
  unsetenv("GRALC_EMBED_ENDPOINT");
  EXPECT_FALSE(MakeProvider(c).ok());
  c.provider.kind = ProviderConfig::Kind::kDeterministic;
  EXPECT_TRUE(MakeProvider(c).ok());
}

}  // namespace
}  // namespace latechunk::pipeline
