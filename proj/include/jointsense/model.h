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

#ifndef JOINTSENSE_MODEL_H_
#define JOINTSENSE_MODEL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jointsense/huffman.h"
#include "jointsense/vocab.h"

namespace jointsense {

// Which items populate the input (context) or output (target) layer.
enum class LayerMode { kWords, kSenses, kBoth };

std::string_view LayerModeName(LayerMode mode);

// Accepts "words", "senses" or "both"; throws UsageError otherwise.
LayerMode ParseLayerMode(std::string_view name);

struct TrainConfig {
  LayerMode input_mode = LayerMode::kSenses;
  LayerMode output_mode = LayerMode::kBoth;
  int dim = 300;
  int window = 8;
  double learning_rate = 0.025;
  int epochs = 5;
  int64_t min_count = 5;
  int threads = 1;
  uint64_t seed = 1;
  // Single worker and a fixed window of `window` positions on each side.
  bool deterministic = false;
  // Frequent-word subsampling threshold; 0 disables it.
  double sample = 0.0;

  // Throws UsageError on out-of-range values.
  void Validate() const;
};

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols),
                                     data_(rows * cols, 0.0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  std::span<double> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<double> &data() { return data_; }
  const std::vector<double> &data() const { return data_; }

  bool AllFinite() const;

  bool operator==(const Matrix &) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// Input embeddings for both namespaces plus the internal-node vectors of the
// word and sense Huffman trees. All rows share one dimension.
struct ModelState {
  Matrix word_input;
  Matrix sense_input;
  Matrix word_output;
  Matrix sense_output;

  bool AllFinite() const;
  bool operator==(const ModelState &) const = default;
};

// A word position with the senses attached to it. `word` is -1 when the form
// fell below min_count but some attached sense did not.
struct ContextPosition {
  int32_t word = -1;
  std::vector<int32_t> senses;

  bool operator==(const ContextPosition &) const = default;
};

struct TrainingInstance {
  int32_t target_word = -1;
  std::vector<int32_t> target_senses;
  std::vector<ContextPosition> context;
};

// Gradient of log p(target) with respect to the hidden vector and to each
// internal node on the target's path (same order as the path).
struct HsGradient {
  std::vector<double> hidden;
  std::vector<int32_t> nodes;
  std::vector<std::vector<double>> node_rows;
};

// log p(target | hidden) under hierarchical softmax: the sum over the path
// of log sigmoid(+-<node, hidden>), with the sign negative for code bit 1.
double HsLogProb(size_t target, const HuffmanTree &tree,
                 std::span<const double> hidden, const Matrix &output,
                 HsGradient *gradient = nullptr);

enum class ParamBlock { kWordInput, kSenseInput, kWordOutput, kSenseOutput };

struct ParamRow {
  ParamBlock block;
  int32_t row;
  auto operator<=>(const ParamRow &) const = default;
};

// Loss E of one instance and its gradient for every row it touches.
struct InstanceGradient {
  double loss = 0.0;
  std::map<ParamRow, std::vector<double>> rows;
};

struct StepResult {
  bool skipped = true;
  double loss = 0.0;
};

// Reusable buffers for Step(); one per worker thread.
struct StepScratch {
  std::vector<double> hidden;
  std::vector<double> hidden_grad;
  struct Touch {
    bool sense_tree;
    int32_t node;
    double g;
  };
  std::vector<Touch> touches;
  size_t inputs = 0;
  double loss = 0.0;
};

// CBOW over words and senses with one hierarchical softmax per namespace.
//
// The hidden layer is the mean of the active input vectors. Every input
// vector that fed the hidden layer receives the full hidden-layer delta, as
// in word2vec CBOW. Items left out of the input layer are updated through
// virtual connections:
//   input=words   each attached sense receives its word's delta
//   input=senses  each word occurrence receives the mean of the deltas its
//                 attached senses got through that occurrence
class JointModel {
 public:
  // Builds both trees from the vocabulary counts and initializes input rows
  // uniformly in [-0.5/dim, 0.5/dim] from `config.seed`; output rows are 0.
  JointModel(const Vocabulary &vocab, const TrainConfig &config);

  ModelState &state() { return state_; }
  const ModelState &state() const { return state_; }
  const HuffmanTree &word_tree() const { return word_tree_; }
  const HuffmanTree &sense_tree() const { return sense_tree_; }
  LayerMode input_mode() const { return input_mode_; }
  LayerMode output_mode() const { return output_mode_; }
  int dim() const { return dim_; }

  // nullopt when the instance has no active input or no target.
  std::optional<double> Loss(const TrainingInstance &instance) const;
  std::optional<InstanceGradient> Gradient(
      const TrainingInstance &instance) const;

  // One SGD step. Skipped instances leave the state untouched.
  StepResult Step(const TrainingInstance &instance, double learning_rate,
                  StepScratch *scratch);

 private:
  bool Forward(const TrainingInstance &instance, StepScratch *scratch) const;
  void AccumulatePath(bool sense_tree, size_t target,
                      StepScratch *scratch) const;

  LayerMode input_mode_;
  LayerMode output_mode_;
  int dim_;
  HuffmanTree word_tree_;
  HuffmanTree sense_tree_;
  ModelState state_;
};

}  // namespace jointsense

#endif  // JOINTSENSE_MODEL_H_
