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

#ifndef JOINTSENSE_VOCAB_H_
#define JOINTSENSE_VOCAB_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jointsense/annotated_corpus.h"

namespace jointsense {

struct VocabEntry {
  std::string label;
  int64_t count = 0;
};

// Word and sense inventories of an annotated corpus. Each namespace has its
// own dense index space ordered by descending count, ties by label.
class Vocabulary {
 public:
  // Counts every position under its (possibly multiword) form and every
  // attached sense occurrence. Entries below `min_count` are dropped.
  // Throws DataError when the corpus holds no tokens.
  static Vocabulary Build(std::istream &annotated, int64_t min_count);
  static Vocabulary Build(std::span<const AnnotatedLine> lines,
                          int64_t min_count);

  const std::vector<VocabEntry> &words() const { return words_; }
  const std::vector<VocabEntry> &senses() const { return senses_; }
  int64_t min_count() const { return min_count_; }

  // -1 when absent.
  int32_t WordIndex(std::string_view word) const;
  int32_t SenseIndex(std::string_view sense) const;

  std::vector<int64_t> WordCounts() const;
  std::vector<int64_t> SenseCounts() const;

 private:
  class Counter;

  std::vector<VocabEntry> words_;
  std::vector<VocabEntry> senses_;
  std::unordered_map<std::string, int32_t> word_index_;
  std::unordered_map<std::string, int32_t> sense_index_;
  int64_t min_count_ = 1;
};

}  // namespace jointsense

#endif  // JOINTSENSE_VOCAB_H_
