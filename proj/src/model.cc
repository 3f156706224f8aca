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

#include "jointsense/model.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "jointsense/errors.h"

namespace jointsense {

std::string_view LayerModeName(LayerMode mode) {
  switch (mode) {
    case LayerMode::kWords:
      return "words";
    case LayerMode::kSenses:
      return "senses";
    case LayerMode::kBoth:
      return "both";
  }
  return "?";
}

LayerMode ParseLayerMode(std::string_view name) {
  if (name == "words") return LayerMode::kWords;
  if (name == "senses") return LayerMode::kSenses;
  if (name == "both") return LayerMode::kBoth;
  throw UsageError("layer mode must be words, senses or both, got '" +
                   std::string(name) + "'");
}

void TrainConfig::Validate() const {
  if (dim < 1) throw UsageError("dim must be >= 1");
  if (window < 1) throw UsageError("window must be >= 1");
  if (!(learning_rate >= 0) || !std::isfinite(learning_rate)) {
    throw UsageError("learning rate must be finite and >= 0");
  }
  if (epochs < 0) throw UsageError("epochs must be >= 0");
  if (min_count < 1) throw UsageError("min_count must be >= 1");
  if (threads < 1) throw UsageError("threads must be >= 1");
  if (!(sample >= 0)) throw UsageError("sample must be >= 0");
}

bool Matrix::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

bool ModelState::AllFinite() const {
  return word_input.AllFinite() && sense_input.AllFinite() &&
         word_output.AllFinite() && sense_output.AllFinite();
}

namespace {

bool UsesWords(LayerMode mode) { return mode != LayerMode::kSenses; }
bool UsesSenses(LayerMode mode) { return mode != LayerMode::kWords; }

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double LogSigmoid(double z) {
  return z >= 0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double UnitUniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double HsLogProb(size_t target, const HuffmanTree &tree,
                 std::span<const double> hidden, const Matrix &output,
                 HsGradient *gradient) {
  const auto &code = tree.code(target);
  const auto &path = tree.path(target);
  if (gradient != nullptr) {
    gradient->hidden.assign(hidden.size(), 0.0);
    gradient->nodes.assign(path.begin(), path.end());
    gradient->node_rows.clear();
  }
  double log_prob = 0.0;
  for (size_t j = 0; j < path.size(); ++j) {
    std::span<const double> node = output.row(path[j]);
    double x = Dot(node, hidden);
    log_prob += LogSigmoid(code[j] ? -x : x);
    if (gradient != nullptr) {
      double g = (1.0 - code[j]) - Sigmoid(x);
      Axpy(g, node, gradient->hidden);
      std::vector<double> row(hidden.begin(), hidden.end());
      for (double &v : row) v *= g;
      gradient->node_rows.push_back(std::move(row));
    }
  }
  return log_prob;
}

JointModel::JointModel(const Vocabulary &vocab, const TrainConfig &config)
    : input_mode_(config.input_mode),
      output_mode_(config.output_mode),
      dim_(config.dim) {
  config.Validate();
  std::vector<int64_t> word_counts = vocab.WordCounts();
  std::vector<int64_t> sense_counts = vocab.SenseCounts();
  word_tree_ = HuffmanTree::Build(word_counts);
  sense_tree_ = HuffmanTree::Build(sense_counts);
  const size_t d = static_cast<size_t>(dim_);
  state_.word_input = Matrix(word_counts.size(), d);
  state_.sense_input = Matrix(sense_counts.size(), d);
  state_.word_output = Matrix(word_tree_.num_internal(), d);
  state_.sense_output = Matrix(sense_tree_.num_internal(), d);

  std::mt19937_64 rng(config.seed);
  for (Matrix *m : {&state_.word_input, &state_.sense_input}) {
    for (double &v : m->data()) v = (UnitUniform(rng) - 0.5) / dim_;
  }
}

void JointModel::AccumulatePath(bool sense_tree, size_t target,
                                StepScratch *scratch) const {
  const HuffmanTree &tree = sense_tree ? sense_tree_ : word_tree_;
  const Matrix &output = sense_tree ? state_.sense_output : state_.word_output;
  const auto &code = tree.code(target);
  const auto &path = tree.path(target);
  for (size_t j = 0; j < path.size(); ++j) {
    std::span<const double> node = output.row(path[j]);
    double x = Dot(node, scratch->hidden);
    scratch->loss -= LogSigmoid(code[j] ? -x : x);
    double g = (1.0 - code[j]) - Sigmoid(x);
    Axpy(g, node, scratch->hidden_grad);
    scratch->touches.push_back({sense_tree, path[j], g});
  }
}

bool JointModel::Forward(const TrainingInstance &instance,
                         StepScratch *scratch) const {
  const size_t d = static_cast<size_t>(dim_);
  scratch->hidden.assign(d, 0.0);
  scratch->hidden_grad.assign(d, 0.0);
  scratch->touches.clear();
  scratch->loss = 0.0;
  scratch->inputs = 0;

  for (const ContextPosition &pos : instance.context) {
    if (UsesWords(input_mode_) && pos.word >= 0) {
      Axpy(1.0, state_.word_input.row(pos.word), scratch->hidden);
      ++scratch->inputs;
    }
    if (UsesSenses(input_mode_)) {
      for (int32_t s : pos.senses) {
        Axpy(1.0, state_.sense_input.row(s), scratch->hidden);
        ++scratch->inputs;
      }
    }
  }
  bool word_target = UsesWords(output_mode_) && instance.target_word >= 0;
  bool sense_target =
      UsesSenses(output_mode_) && !instance.target_senses.empty();
  if (scratch->inputs == 0 || (!word_target && !sense_target)) return false;

  const double inv = 1.0 / static_cast<double>(scratch->inputs);
  for (double &v : scratch->hidden) v *= inv;

  if (word_target) AccumulatePath(false, instance.target_word, scratch);
  if (sense_target) {
    for (int32_t s : instance.target_senses) AccumulatePath(true, s, scratch);
  }
  return true;
}

std::optional<double> JointModel::Loss(const TrainingInstance &instance) const {
  StepScratch scratch;
  if (!Forward(instance, &scratch)) return std::nullopt;
  return scratch.loss;
}

std::optional<InstanceGradient> JointModel::Gradient(
    const TrainingInstance &instance) const {
  StepScratch scratch;
  if (!Forward(instance, &scratch)) return std::nullopt;
  InstanceGradient result;
  result.loss = scratch.loss;
  const size_t d = static_cast<size_t>(dim_);
  auto row = [&](ParamBlock block, int32_t index) -> std::vector<double> & {
    auto [it, inserted] =
        result.rows.try_emplace(ParamRow{block, index}, d, 0.0);
    return it->second;
  };
  for (const StepScratch::Touch &t : scratch.touches) {
    auto &g = row(t.sense_tree ? ParamBlock::kSenseOutput
                               : ParamBlock::kWordOutput,
                  t.node);
    Axpy(-t.g, scratch.hidden, g);
  }
  // dE/dh = -hidden_grad; each input contributes 1/K of h.
  const double share = -1.0 / static_cast<double>(scratch.inputs);
  for (const ContextPosition &pos : instance.context) {
    if (UsesWords(input_mode_) && pos.word >= 0) {
      Axpy(share, scratch.hidden_grad, row(ParamBlock::kWordInput, pos.word));
    }
    if (UsesSenses(input_mode_)) {
      for (int32_t s : pos.senses) {
        Axpy(share, scratch.hidden_grad, row(ParamBlock::kSenseInput, s));
      }
    }
  }
  return result;
}

StepResult JointModel::Step(const TrainingInstance &instance,
                            double learning_rate, StepScratch *scratch) {
  if (!Forward(instance, scratch)) return StepResult{};

  for (const StepScratch::Touch &t : scratch->touches) {
    Matrix &output = t.sense_tree ? state_.sense_output : state_.word_output;
    Axpy(learning_rate * t.g, scratch->hidden, output.row(t.node));
  }

  // The delta every contributing input vector receives.
  std::span<const double> delta_dir = scratch->hidden_grad;
  const double lr = learning_rate;

  switch (input_mode_) {
    case LayerMode::kWords:
      for (const ContextPosition &pos : instance.context) {
        if (pos.word < 0) continue;
        Axpy(lr, delta_dir, state_.word_input.row(pos.word));
        for (int32_t s : pos.senses) {
          Axpy(lr, delta_dir, state_.sense_input.row(s));
        }
      }
      break;
    case LayerMode::kSenses:
      // Every sense at a position received lr * delta through it, so the
      // mean over that occurrence's senses is lr * delta as well.
      for (const ContextPosition &pos : instance.context) {
        for (int32_t s : pos.senses) {
          Axpy(lr, delta_dir, state_.sense_input.row(s));
        }
        if (pos.word >= 0 && !pos.senses.empty()) {
          Axpy(lr, delta_dir, state_.word_input.row(pos.word));
        }
      }
      break;
    case LayerMode::kBoth:
      for (const ContextPosition &pos : instance.context) {
        if (pos.word >= 0) Axpy(lr, delta_dir, state_.word_input.row(pos.word));
        for (int32_t s : pos.senses) {
          Axpy(lr, delta_dir, state_.sense_input.row(s));
        }
      }
      break;
  }
  return StepResult{false, scratch->loss};
}

}  // namespace jointsense
