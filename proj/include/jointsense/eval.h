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

#ifndef JOINTSENSE_EVAL_H_
#define JOINTSENSE_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jointsense/embeddings.h"
#include "jointsense/semnet.h"

namespace jointsense {

// Read-only view of a joint embedding space with each word's candidate
// senses (lexicon candidates that have an `s#` row in the space).
class VectorSpace {
 public:
  explicit VectorSpace(Embeddings embeddings, const Lexicon *lexicon = nullptr);

  size_t size() const { return embeddings_.labels.size(); }
  int dim() const { return embeddings_.dim; }
  const std::string &label(size_t i) const { return embeddings_.labels[i]; }
  std::span<const float> vector(size_t i) const { return embeddings_.row(i); }

  std::optional<size_t> Find(std::string_view label) const;

  // Candidate sense rows in lexicon order; empty for unknown words.
  const std::vector<size_t> &Candidates(std::string_view word) const;

  // Cosine of two rows; 0 when either is the zero vector.
  double Cosine(size_t a, size_t b) const;
  bool IsZero(size_t i) const { return norms_[i] == 0.0; }

 private:
  Embeddings embeddings_;
  std::vector<double> norms_;
  std::unordered_map<std::string, size_t> index_;
  std::unordered_map<std::string, std::vector<size_t>> candidates_;
};

// Max cosine over all candidate sense pairs of the two words; nullopt when
// either word has no candidate sense in the space.
std::optional<double> ClosestSenseSimilarity(const VectorSpace &space,
                                             std::string_view w1,
                                             std::string_view w2);

// Cosine of the two word vectors; nullopt when either is missing.
std::optional<double> WordCosineSimilarity(const VectorSpace &space,
                                           std::string_view w1,
                                           std::string_view w2);

enum class SimilarityStrategy { kClosestSense, kWord };

SimilarityStrategy ParseSimilarityStrategy(std::string_view name);

struct SimilarityItem {
  std::string w1;
  std::string w2;
  double gold = 0.0;
};

// `word1<TAB>word2<TAB>score`; words are lowercased.
std::vector<SimilarityItem> ReadSimilarityDataset(std::istream &in);

struct SimilarityReport {
  double pearson = 0.0;
  double spearman = 0.0;
  size_t evaluated = 0;
  size_t total = 0;
  std::vector<std::string> excluded;
  // Covered pairs that involved a zero (untrained) vector.
  size_t zero_vector_pairs = 0;

  double coverage() const {
    return total == 0 ? 0.0 : static_cast<double>(evaluated) / total;
  }
};

// Uncovered pairs are excluded and listed. Throws DataError when nothing is
// covered or the covered scores are constant.
SimilarityReport EvaluateSimilarity(const VectorSpace &space,
                                    std::span<const SimilarityItem> dataset,
                                    SimilarityStrategy strategy);

struct ClusterItem {
  std::string synset1;
  std::string synset2;
  int gold = 0;
};

// `synsetId1<TAB>synsetId2<TAB>{0|1}`.
std::vector<ClusterItem> ReadClusteringDataset(std::istream &in);

// Confusion counts over covered pairs; every metric derives from them.
struct ClusteringReport {
  double gamma = 0.0;
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
  size_t tn = 0;
  size_t total = 0;
  std::vector<std::string> excluded;

  size_t evaluated() const { return tp + fp + fn + tn; }
  double accuracy() const;
  // Uncovered pairs count as errors.
  double accuracy_all() const;
  double precision() const;
  double recall() const;
  double f_measure() const;
};

// Predicts "same cluster" iff cosine > gamma.
ClusteringReport ScoreClustering(std::span<const double> cosines,
                                 std::span<const int> gold, double gamma);

// Throws DataError when no pair is covered.
ClusteringReport EvaluateClustering(const VectorSpace &space,
                                    std::span<const ClusterItem> dataset,
                                    double gamma);

inline constexpr double kDefaultGamma = 0.35;
inline constexpr int kGammaGridSteps = 20;  // 0.00, 0.05, ..., 1.00

struct GammaSearch {
  double gamma = 0.0;
  double f_measure = 0.0;
  std::vector<std::pair<double, double>> grid;  // (gamma, F)
};

// Best F over the 21-point grid; ties keep the smallest gamma.
GammaSearch TuneGammaFromScores(std::span<const double> cosines,
                                std::span<const int> gold);
GammaSearch TuneGamma(const VectorSpace &space,
                      std::span<const ClusterItem> dev);

// Candidate of `word` whose vector is closest to the word vector; ties go to
// the earlier candidate. nullopt when the word or its candidates are absent.
std::optional<size_t> MostCommonSense(const VectorSpace &space,
                                      std::string_view word);

struct WsdItem {
  std::string id;
  std::string lemma;
  std::vector<std::string> gold;
};

// `instanceId<TAB>lemma<TAB>gold1,gold2,...`.
std::vector<WsdItem> ReadWsdDataset(std::istream &in);

struct McsReport {
  size_t attempted = 0;
  size_t correct = 0;
  size_t total = 0;
  std::vector<std::string> excluded;

  double precision() const;  // over attempted
  double recall() const;     // over all instances
  double f_measure() const;
};

McsReport EvaluateMcs(const VectorSpace &space,
                      std::span<const WsdItem> dataset);

struct Neighbor {
  std::string label;
  double cosine = 0.0;
};

// Top-k rows of the whole space by cosine to `label`, excluding it. Ties are
// ordered by row. Throws std::out_of_range when the label is absent.
std::vector<Neighbor> NearestNeighbors(const VectorSpace &space,
                                       std::string_view label, size_t k);

// Human-readable table followed by key=value lines.
void PrintReport(const SimilarityReport &report, std::ostream &out);
void PrintReport(const ClusteringReport &report, std::ostream &out);
void PrintReport(const GammaSearch &search, std::ostream &out);
void PrintReport(const McsReport &report, std::ostream &out);

}  // namespace jointsense

#endif  // JOINTSENSE_EVAL_H_
