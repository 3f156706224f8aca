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

#ifndef JOINTSENSE_ANNOTATOR_H_
#define JOINTSENSE_ANNOTATOR_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jointsense/annotated_corpus.h"
#include "jointsense/semnet.h"

namespace jointsense {

// Tokens of one text unit (one input line), lowercased.
using TextUnit = std::vector<std::string>;

// Lowercases and splits on whitespace. Throws DataError (with `line_no`) when
// a token contains '|' or ',', which the annotated format reserves.
TextUnit TokenizeUnit(std::string_view line, size_t line_no = 0);

struct ConnectivityParams {
  // Larger delta lowers the minimum-connections threshold.
  double delta = 100.0;
  int max_ngram = kMaxFormTokens;
};

// An n-gram of the unit found in the lexicon. Covers tokens [start, end).
struct Mention {
  size_t start = 0;
  size_t end = 0;
  std::string form;
  std::vector<SynsetIndex> candidates;

  size_t length() const { return end - start; }
  bool Overlaps(const Mention &other) const {
    return start < other.end && other.start < end;
  }
};

struct ScoredSense {
  SynsetIndex sense = -1;
  int64_t n = 0;
};

// A mention that survived overlap resolution with the senses it keeps.
// `senses` is empty when no candidate reached the threshold.
struct Connection {
  Mention mention;
  int64_t best_n = 0;
  std::vector<SynsetIndex> senses;
};

struct AnnotatedUnit {
  TextUnit tokens;
  // Ordered by start position; spans are pairwise disjoint.
  std::vector<Connection> connections;
  size_t pool_size = 0;
  double theta = 0.0;
};

// Shallow word-sense connectivity over a fixed network and lexicon.
// Immutable after construction and safe to share between threads.
class Annotator {
 public:
  // Resolves every lexicon candidate against `network`; throws DataError
  // when one is missing. Both references must outlive the annotator.
  Annotator(const SemanticNetwork &network, const Lexicon &lexicon,
            ConnectivityParams params = {});

  const SemanticNetwork &network() const { return network_; }
  const ConnectivityParams &params() const { return params_; }

  // Every lexicon n-gram (n <= max_ngram) of the unit, ordered by start and
  // then by length. Overlapping mentions are all returned.
  std::vector<Mention> ExtractMentions(const TextUnit &unit) const;

  // Distinct union of candidates, sorted by index.
  static std::vector<SynsetIndex> CandidatePool(
      std::span<const Mention> mentions);

  // theta = (|S_T| + |T|) / (2 delta).
  static double Threshold(size_t pool_size, size_t unit_length,
                          const ConnectivityParams &params);

  // Number of distinct neighbors of `sense` that are candidates of some
  // mention other than mentions[owner].
  ScoredSense ScoreSense(SynsetIndex sense, size_t owner,
                         std::span<const Mention> mentions) const;

  AnnotatedUnit Connect(const TextUnit &unit) const;

  // Candidates of the unigram `token`, or nullptr.
  const std::vector<SynsetIndex> *Unigram(const std::string &token) const;

 private:
  class PoolIndex;

  const SemanticNetwork &network_;
  ConnectivityParams params_;
  std::unordered_map<std::string, std::vector<SynsetIndex>> resolved_;
};

// A mention paired with the highest n among its candidates.
struct ScoredMention {
  Mention mention;
  int64_t best_n = 0;
};

// Greedy overlap resolution: repeatedly keep the mention with the highest
// best_n, then the longer span, then the leftmost start, discarding every
// mention sharing a token with it. Returns the kept indices in pick order.
std::vector<size_t> ResolveOverlaps(std::span<const ScoredMention> mentions);

// Renders selected connections as `form|id,...` and every other token bare.
AnnotatedLine ToAnnotatedLine(const AnnotatedUnit &unit,
                              const SemanticNetwork &network);

struct CorpusStats {
  size_t units = 0;
  size_t tokens = 0;          // N
  size_t content_tokens = 0;  // tokens whose unigram has >= 1 candidate
  size_t polysemy_sum = 0;    // sum of |S_w| over content tokens
  size_t connected_mentions = 0;
  size_t connected_senses = 0;

  // Average polysemy degree; 0 with `alpha_defined == false` when the corpus
  // has no content tokens.
  double alpha() const {
    return content_tokens == 0
               ? 0.0
               : static_cast<double>(polysemy_sum) / content_tokens;
  }
  bool alpha_defined() const { return content_tokens > 0; }
};

// N and alpha over a raw corpus, one unit per line. Tokens are looked up as
// unigrams.
CorpusStats ComputeCorpusStats(std::istream &corpus, const Lexicon &lexicon);

// Annotates one unit per line and writes the results in input order. Empty
// lines are echoed as empty lines. `threads` workers share each batch; the
// output does not depend on the thread count.
CorpusStats AnnotateCorpus(std::istream &corpus, std::ostream &out,
                           const Annotator &annotator, int threads = 1);

// key=value lines.
void WriteCorpusStats(const CorpusStats &stats, std::ostream &out);

}  // namespace jointsense

#endif  // JOINTSENSE_ANNOTATOR_H_
