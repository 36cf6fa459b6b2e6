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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "fmt/format.h"
#include "gtest/gtest.h"
#include "unit/temp_dir.h"

namespace {

using latechunk::testing::ReadFile;
using latechunk::testing::TempDir;

int RunCli(const std::string& args) {
  std::string cmd =
      fmt::format("'{}' {} >/dev/null 2>&1", LATECHUNK_CLI, args);
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(RunCli(""), 1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
  EXPECT_EQ(RunCli("ingest"), 1);  // no --config
  EXPECT_EQ(RunCli("--config /nonexistent/config.json ingest"), 1);
  EXPECT_EQ(RunCli("--workers many ingest"), 1);
  EXPECT_EQ(RunCli("--help"), 0);
}

TEST(CliTest, PipelineAndDataErrors) {
  TempDir dir;
  std::string demo = dir.Sub("demo");
  ASSERT_EQ(RunCli(fmt::format("synth --out '{}' --documents 2 --dim 32", demo)), 0);
  std::string cfg = fmt::format("--config '{}/config.json'", demo);
  std::string out = fmt::format("--out-dir '{}'", dir.Sub("out"));

  EXPECT_EQ(RunCli(fmt::format("{} {} eval", cfg, out)), 2);  // no benchmark
  EXPECT_EQ(RunCli(fmt::format("{} {} index --strategy bogus", cfg, out)), 1);
  EXPECT_EQ(RunCli(fmt::format("{} {} --beta 2 eval", cfg, out)), 1);
  EXPECT_EQ(RunCli(fmt::format("{} {} ingest", cfg, out)), 0);
  EXPECT_TRUE(std::filesystem::exists(dir.Sub("out/manifest.json")));
  EXPECT_EQ(RunCli(fmt::format(
                "{} {} index --strategy naive late --condition fulltext --timing",
                cfg, out)),
            0);
  EXPECT_TRUE(std::filesystem::exists(dir.Sub("out/index/late.fulltext.idx")));
  EXPECT_EQ(RunCli(fmt::format("{} {} bench-gen", cfg, out)), 0);
  EXPECT_EQ(RunCli(fmt::format("{} {} eval", cfg, out)), 2);  // MissingIndex
  EXPECT_EQ(RunCli(fmt::format("{} {} --workers 2 all", cfg, out)), 0);
  std::string report = dir.Sub("out/report.json");
  EXPECT_NE(ReadFile(report).find("gralc_graph"), std::string::npos);
  EXPECT_EQ(RunCli(fmt::format("compare '{}' '{}'", report, report)), 0);
  EXPECT_EQ(RunCli(fmt::format("compare '{}' --baseline-strategy naive", report)), 0);
  EXPECT_EQ(RunCli(fmt::format("compare '{}'", dir.Sub("missing.json"))), 2);
}

TEST(CliTest, EndpointVariableSelectsRemoteTarget) {
  TempDir dir;
  std::string demo = dir.Sub("demo");
  ASSERT_EQ(RunCli(fmt::format("synth --out '{}' --documents 1 --dim 32", demo)), 0);
  dir.Write("remote.json",
            fmt::format(R"({{"corpus_dir": "{0}/articles",
                            "concept_graph": "{0}/concepts.tsv",
                            "dictionary": "{0}/dictionary.tsv",
                            "strategies": ["late"], "conditions": ["fulltext"],
                            "provider": {{"kind": "remote", "dim": 32,
                                          "timeout_seconds": 1}}}})",
                        demo));
  std::string base = fmt::format("--config '{}' --out-dir '{}' index",
                                 dir.Sub("remote.json"), dir.Sub("out"));
  // No endpoint anywhere: configuration error.
  unsetenv("GRALC_EMBED_ENDPOINT");
  EXPECT_EQ(RunCli(base), 1);
  // An unreachable endpoint is a provider failure, a data error.
  setenv("GRALC_EMBED_ENDPOINT", "http://127.0.0.1:9", 1);
  EXPECT_EQ(RunCli(base), 2);
  unsetenv("GRALC_EMBED_ENDPOINT");
}

}  // namespace
