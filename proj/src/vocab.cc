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

#include "jointsense/vocab.h"

#include <algorithm>
#include <istream>

#include "jointsense/errors.h"

namespace jointsense {

class Vocabulary::Counter {
 public:
  void Add(const AnnotatedLine &line) {
    for (const AnnotatedToken &token : line) {
      ++words_[token.form];
      ++total_;
      for (const SynsetId &s : token.senses) ++senses_[s];
    }
  }

  Vocabulary Finish(int64_t min_count) const {
    if (total_ == 0) throw DataError("annotated corpus is empty");
    Vocabulary vocab;
    vocab.min_count_ = min_count;
    vocab.words_ = Select(words_, min_count);
    vocab.senses_ = Select(senses_, min_count);
    for (size_t i = 0; i < vocab.words_.size(); ++i) {
      vocab.word_index_.emplace(vocab.words_[i].label,
                                static_cast<int32_t>(i));
    }
    for (size_t i = 0; i < vocab.senses_.size(); ++i) {
      vocab.sense_index_.emplace(vocab.senses_[i].label,
                                 static_cast<int32_t>(i));
    }
    return vocab;
  }

 private:
  static std::vector<VocabEntry> Select(
      const std::unordered_map<std::string, int64_t> &counts,
      int64_t min_count) {
    std::vector<VocabEntry> entries;
    for (const auto &[label, count] : counts) {
      if (count >= min_count) entries.push_back({label, count});
    }
    std::sort(entries.begin(), entries.end(),
              [](const VocabEntry &a, const VocabEntry &b) {
                if (a.count != b.count) return a.count > b.count;
                return a.label < b.label;
              });
    return entries;
  }

  std::unordered_map<std::string, int64_t> words_;
  std::unordered_map<std::string, int64_t> senses_;
  int64_t total_ = 0;
};

Vocabulary Vocabulary::Build(std::istream &annotated, int64_t min_count) {
  Counter counter;
  std::string line;
  size_t line_no = 0;
  while (std::getline(annotated, line)) {
    ++line_no;
    counter.Add(ParseAnnotatedLine(line, line_no));
  }
  if (annotated.bad()) {
    throw DataError("read failure after line " + std::to_string(line_no));
  }
  return counter.Finish(min_count);
}

Vocabulary Vocabulary::Build(std::span<const AnnotatedLine> lines,
                             int64_t min_count) {
  Counter counter;
  for (const AnnotatedLine &line : lines) counter.Add(line);
  return counter.Finish(min_count);
}

int32_t Vocabulary::WordIndex(std::string_view word) const {
  auto it = word_index_.find(std::string(word));
  return it == word_index_.end() ? -1 : it->second;
}

int32_t Vocabulary::SenseIndex(std::string_view sense) const {
  auto it = sense_index_.find(std::string(sense));
  return it == sense_index_.end() ? -1 : it->second;
}

std::vector<int64_t> Vocabulary::WordCounts() const {
  std::vector<int64_t> counts;
  for (const VocabEntry &e : words_) counts.push_back(e.count);
  return counts;
}

std::vector<int64_t> Vocabulary::SenseCounts() const {
  std::vector<int64_t> counts;
  for (const VocabEntry &e : senses_) counts.push_back(e.count);
  return counts;
}

}  // namespace jointsense
