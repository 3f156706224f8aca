// Copyright 2026 The jointsense Authors.
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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "jointsense/annotated_corpus.h"
#include "jointsense/config.h"
#include "jointsense/embeddings.h"
#include "jointsense/errors.h"
#include "jointsense/fileutil.h"
#include "jointsense/vocab.h"

namespace jointsense {
namespace {

TEST(AnnotatedCorpusTest, ParsesMentionsAndBareTokens) {
  AnnotatedLine line = ParseAnnotatedLine("bank|s1,s2 the water|s3");
  ASSERT_EQ(line.size(), 3u);
  EXPECT_EQ(line[0].form, "bank");
  EXPECT_EQ(line[0].senses, (std::vector<SynsetId>{"s1", "s2"}));
  EXPECT_TRUE(line[1].senses.empty());
  EXPECT_EQ(FormatAnnotatedLine(line), "bank|s1,s2 the water|s3");
  EXPECT_TRUE(ParseAnnotatedLine("   ").empty());
  EXPECT_EQ(FormatAnnotatedLine({}), "");
}

TEST(AnnotatedCorpusTest, RejectsMalformedFields) {
  for (const char *bad : {"a|", "|s1", "a|s1,", "a|s1||s2", "a|,s1",
                          "a|s1,,s2", "a,b", "a,b|s1"}) {
    EXPECT_THROW(ParseAnnotatedLine(bad, 4), DataError) << bad;
  }
  try {
    ParseAnnotatedLine("ok x|", 12);
  } catch (const DataError &e) {
    EXPECT_EQ(e.line(), 12u);
  }
}

TEST(AnnotatedCorpusTest, RandomLinesRoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    AnnotatedLine line;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      AnnotatedToken token;
      token.form = "w" + std::to_string(pick(rng));
      if (pick(rng) % 2 == 0) token.form += "_x";
      int senses = pick(rng) % 3;
      for (int s = 0; s < senses; ++s) {
        token.senses.push_back("n" + std::to_string(pick(rng)) + ":x");
      }
      line.push_back(token);
    }
    std::string text = FormatAnnotatedLine(line);
    EXPECT_EQ(ParseAnnotatedLine(text), line);
    EXPECT_EQ(FormatAnnotatedLine(ParseAnnotatedLine(text)), text);
  }
}

Vocabulary BuildFrom(const std::string &text, int64_t min_count) {
  std::istringstream in(text);
  return Vocabulary::Build(in, min_count);
}

TEST(VocabularyTest, DropsRareWords) {
  Vocabulary v = BuildFrom("a a b\n", 2);
  ASSERT_EQ(v.words().size(), 1u);
  EXPECT_EQ(v.words()[0].label, "a");
  EXPECT_EQ(v.words()[0].count, 2);
  EXPECT_EQ(v.WordIndex("b"), -1);
  EXPECT_TRUE(v.senses().empty());
}

TEST(VocabularyTest, CountsWordsAndSenses) {
  std::string corpus;
  for (int i = 0; i < 5; ++i) corpus += "bank|s1 water|s3\n";
  Vocabulary v = BuildFrom(corpus, 5);
  EXPECT_EQ(v.words().size(), 2u);
  EXPECT_EQ(v.senses().size(), 2u);
  EXPECT_EQ(v.SenseCounts(), (std::vector<int64_t>{5, 5}));
  EXPECT_GE(v.SenseIndex("s1"), 0);
  EXPECT_GE(v.WordIndex("water"), 0);
  EXPECT_EQ(BuildFrom(corpus, 6).words().size(), 0u);
}

TEST(VocabularyTest, SortedByFrequency) {
  Vocabulary v = BuildFrom("c b b a a a new_york|s1,s2 new_york|s1\n", 1);
  ASSERT_EQ(v.words().size(), 4u);
  EXPECT_EQ(v.words()[0].label, "a");
  EXPECT_EQ(v.words()[1].label, "b");
  EXPECT_EQ(v.words()[2].label, "new_york");
  EXPECT_EQ(v.senses()[0].label, "s1");
  EXPECT_EQ(v.senses()[0].count, 2);
  EXPECT_EQ(v.WordCounts(), (std::vector<int64_t>{3, 2, 2, 1}));
}

TEST(VocabularyTest, EmptyCorpusIsAnError) {
  EXPECT_THROW(BuildFrom("", 1), DataError);
  EXPECT_THROW(BuildFrom("\n\n", 1), DataError);
}

Embeddings SampleEmbeddings() {
  Embeddings e;
  e.dim = 3;
  e.labels = {"bank", "water", "s#s1"};
  e.values = {0.1f, -2.5f, 3.0f, 0.0f, 1e-8f, 7.25f, -0.333333f, 4.0f, 5.5f};
  return e;
}

TEST(EmbeddingsTest, WritesHeaderThenRows) {
  std::ostringstream out;
  WriteEmbeddings(SampleEmbeddings(), out);
  std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 3");
  EXPECT_NE(text.find("\nbank 0.1 -2.5 3\n"), std::string::npos);
}

TEST(EmbeddingsTest, RoundTripIsByteIdentical) {
  std::ostringstream first;
  WriteEmbeddings(SampleEmbeddings(), first);
  std::istringstream in(first.str());
  Embeddings back = ReadEmbeddings(in);
  EXPECT_EQ(back.labels, SampleEmbeddings().labels);
  EXPECT_EQ(back.values, SampleEmbeddings().values);
  std::ostringstream second;
  WriteEmbeddings(back, second);
  EXPECT_EQ(second.str(), first.str());
}

TEST(EmbeddingsTest, RejectsMalformedFiles) {
  for (const char *bad : {"", "x 3\n", "1 2\na 1\n", "1 2\na 1 zz\n",
                          "2 1\na 1\na 2\n", "3 1\na 1\nb 2\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(ReadEmbeddings(in), DataError) << bad;
  }
}

TEST(EmbeddingsTest, SenseLabels) {
  EXPECT_EQ(SenseLabel("bn:1n"), "s#bn:1n");
  EXPECT_TRUE(IsSenseLabel("s#x"));
  EXPECT_FALSE(IsSenseLabel("x"));
}

TEST(ConfigTest, ParsesKeyValues) {
  std::istringstream in("# comment\n\n--dim = 50\nwindow=4\n");
  PipelineConfig c = PipelineConfig::Load(in);
  EXPECT_EQ(c.Get("dim"), "50");
  EXPECT_EQ(c.Get("window"), "4");
  EXPECT_FALSE(c.Get("lr").has_value());
}

TEST(ConfigTest, RejectsMalformedLines) {
  for (const char *bad : {"dim\n", "=3\n", "dim=1\ndim=2\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(PipelineConfig::Load(in), DataError) << bad;
  }
}

TEST(FileUtilTest, AtomicFileOnlyAppearsOnCommit) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "jointsense_fileutil_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "out.txt").string();
  std::filesystem::remove(path);
  {
    AtomicFile file(path);
    file.stream() << "partial";
  }
  EXPECT_FALSE(std::filesystem::exists(path));
  {
    AtomicFile file(path);
    file.stream() << "done\n";
    file.Commit();
  }
  std::ifstream in(path);
  std::string text;
  std::getline(in, text);
  EXPECT_EQ(text, "done");
  EXPECT_THROW(CheckOutputPath((dir / "missing" / "x").string()), DataError);
  EXPECT_THROW(OpenInput((dir / "missing.txt").string()), DataError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace jointsense
