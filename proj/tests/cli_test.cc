// Copyright 2026 The ptrac Authors.
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

#include "ptrac/cli.h"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

#include "ptrac/io.h"
#include "test_support.h"

namespace ptrac {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t Lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ptrac_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    WriteTextFile(path, text);
    return path.string();
  }

  const std::string inv_ = testing::PersianInventoryPath();
  const std::string fixture_ = testing::FixturePath();
  std::filesystem::path dir_;
};

TEST_F(CliTest, AnalyzeFixtureCsv) {
  const auto r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study",
                      "clusters", "--aggregate", "following-segment", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("context,feature,weighted_count,pair_count\n", 0), 0u);
  for (const char* line : {"_l,voice,2,1\n", "_m,voice,1,1\n", "_n,voice,1,1\n", "_r,voice,5,3\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST_F(CliTest, PairsVoiceOrdered) {
  const auto r = Invoke({"pairs", "--inventory", inv_, "--feature", "voice", "--orientation", "ordered"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Lines(r.out), 20u);
  EXPECT_NE(r.out.find("b p voice\n"), std::string::npos);
  EXPECT_NE(r.out.find("p b voice\n"), std::string::npos);
  EXPECT_EQ(Lines(Invoke({"pairs", "--inventory", inv_}).out), 70u);
}

TEST_F(CliTest, MissingLexiconIsUsageError) {
  const auto r = Invoke({"analyze", "--inventory", inv_, "--study", "clusters"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--lexicon"), std::string::npos);
}

TEST_F(CliTest, Syllabify) {
  auto r = Invoke({"syllabify", "--inventory", inv_, "satrha", "bara"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "satr.ha\nba.ra\n");
  r = Invoke({"syllabify", "--inventory", inv_, "--lexicon", fixture_});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Lines(r.out), 16u);
  EXPECT_NE(r.out.find("hozn\thozn\n"), std::string::npos);
  r = Invoke({"syllabify", "--inventory", inv_, "ab", "band"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_EQ(r.out, "band\n");
  EXPECT_EQ(Invoke({"syllabify", "--inventory", inv_}).code, kExitUsage);
}

TEST_F(CliTest, ListPairs) {
  const auto r = Invoke({"list-pairs", "--inventory", inv_, "--lexicon", fixture_, "--study",
                      "clusters", "--feature", "voice", "--context", "_n"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "context\tframe\tfirst\tsecond\tweight\twitnesses\n"
            "_n\t_n\tsn\tzn\t1\t(hosn, hozn)\n");
  const auto bad = Invoke({"list-pairs", "--inventory", inv_, "--lexicon", fixture_, "--study",
                        "clusters", "--feature", "voice", "--context", "nope"});
  EXPECT_EQ(bad.code, kExitInvalid);
}

TEST_F(CliTest, AnalyzeFormatsAndOutputFile) {
  const std::string out = (dir_ / "chart.svg").string();
  auto r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study", "clusters",
                "--aggregate", "following-class", "--format", "svg", "--out", out});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(ReadTextFile(out).find("data-context=\"nasal\""), std::string::npos);

  r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study", "positions",
           "--aggregate", "position", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"study\": \"positions\""), std::string::npos);

  r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study", "clusters",
           "--aggregate", "position"});
  EXPECT_EQ(r.code, kExitInvalid);

  r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study", "clusters",
           "--out", "/nonexistent/dir/x.csv"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, HiddenOracleFlag) {
  const auto r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study",
                      "clusters", "--oracle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("oracle: matrices agree"), std::string::npos);
  EXPECT_EQ(Invoke({"analyze", "--help"}).out.find("--oracle"), std::string::npos);
}

TEST_F(CliTest, Filters) {
  const auto r = Invoke({"analyze", "--inventory", inv_, "--lexicon", fixture_, "--study",
                      "clusters", "--feature", "manner", "--format", "markdown",
                      "--aggregate", "total"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("| total | manner | 3 | 3 |"), std::string::npos);
  EXPECT_NE(r.out.find("| total | voice | 0 | 0 |"), std::string::npos);
}

TEST_F(CliTest, HelpAndVersion) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({"--version"}).code, kExitOk);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
}

TEST_F(CliTest, LexiconDiagnostics) {
  const std::string lex = Write("bad.tsv", "band\tband\nxyz\tba5d\nabad\tabad\n");
  auto r = Invoke({"analyze", "--inventory", inv_, "--lexicon", lex, "--study", "positions"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("bad.tsv:2:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("bad.tsv:3:"), std::string::npos) << r.err;
  r = Invoke({"analyze", "--inventory", inv_, "--lexicon", lex, "--study", "positions", "--strict"});
  EXPECT_EQ(r.code, kExitInvalid);
}

// Exit-code contract: usage and I/O problems give 1, invalid data gives 2.
TEST_F(CliTest, MalformedInputCorpus) {
  const std::string good_lex = Write("good.tsv", "band\tband\n");
  const std::string empty_lex = Write("empty.tsv", "");
  const std::vector<std::pair<std::string, int>> inventories = {
      {"[phonemes]\nb consonant\nb consonant\na vowel\n[pairs]\n", kExitInvalid},
      {"[phonemes]\nb consonant\na vowel\n", kExitInvalid},
      {"garbage\n", kExitInvalid},
      {"[phonemes]\nb consonant\np consonant\na vowel\n[pairs]\nb p voice\nb p place\n", kExitInvalid},
      {"[phonemes]\nb consonant\na vowel\n[features]\n", kExitInvalid},
      {"", kExitInvalid},
      {"[phonemes]\nb consonant\na vowel\n[pairs]\n", kExitOk},
  };
  int i = 0;
  for (const auto& [text, expected] : inventories) {
    const std::string path = Write("inv" + std::to_string(i++) + ".inv", text);
    EXPECT_EQ(Invoke({"pairs", "--inventory", path}).code, expected) << text;
    const int analyze =
        Invoke({"analyze", "--inventory", path, "--lexicon", empty_lex, "--study", "clusters"}).code;
    EXPECT_EQ(analyze, expected) << text;
  }

  const std::vector<std::vector<std::string>> usage = {
      {"pairs"},
      {"pairs", "--inventory", (dir_ / "missing.inv").string()},
      {"pairs", "--inventory", inv_, "--feature", "height"},
      {"pairs", "--inventory", inv_, "--orientation", "sideways"},
      {"analyze", "--inventory", inv_, "--lexicon", good_lex, "--study", "words"},
      {"analyze", "--inventory", inv_, "--lexicon", (dir_ / "missing.tsv").string(), "--study", "clusters"},
      {"analyze", "--inventory", inv_, "--lexicon", good_lex, "--study", "clusters", "--format", "pdf"},
      {"list-pairs", "--inventory", inv_, "--lexicon", good_lex, "--study", "clusters"},
      {"frobnicate"},
      {"pairs", "--inventory", inv_, "--bogus"},
  };
  for (const auto& args : usage) {
    EXPECT_EQ(Invoke(args).code, kExitUsage) << args[0] << " " << args.back();
  }
}

}  // namespace
}  // namespace ptrac
