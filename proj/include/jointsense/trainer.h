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

#ifndef JOINTSENSE_TRAINER_H_
#define JOINTSENSE_TRAINER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "jointsense/annotated_corpus.h"
#include "jointsense/model.h"
#include "jointsense/vocab.h"

namespace jointsense {

// A unit mapped onto vocabulary indices. Positions whose form and senses are
// all out of vocabulary are removed; a position with an unknown form but a
// known sense keeps word = -1.
using EncodedUnit = std::vector<ContextPosition>;

struct EncodedCorpus {
  std::vector<EncodedUnit> units;
  size_t positions = 0;
};

EncodedUnit EncodeLine(const AnnotatedLine &line, const Vocabulary &vocab);
EncodedCorpus EncodeCorpus(std::istream &annotated, const Vocabulary &vocab);
EncodedCorpus EncodeCorpus(std::span<const AnnotatedLine> lines,
                           const Vocabulary &vocab);

// Fills `instance` for target position `target` with up to `span` positions
// on each side as context. The target's own word and senses are excluded.
void MakeInstanceAt(const EncodedUnit &unit, size_t target, int span,
                    TrainingInstance *instance);

// One instance per position. The span is `window` in deterministic mode and
// uniform in [1, window] otherwise.
std::vector<TrainingInstance> MakeInstances(const EncodedUnit &unit,
                                            int window, bool deterministic,
                                            std::mt19937_64 &rng);

// Learning rate after `processed` of `total` positions: linear decay from
// the initial rate, floored at 1e-4 of it.
double ScheduledLearningRate(double initial, size_t processed, size_t total);

struct TrainReport {
  // Mean instance loss per epoch; 0 for an epoch without steps.
  std::vector<double> epoch_loss;
  std::vector<size_t> epoch_steps;
  size_t skipped = 0;
};

// Runs `config.epochs` passes. Deterministic mode uses one worker; otherwise
// `config.threads` workers update the shared state without locking.
// `on_epoch`, if set, is called with the mean loss after every epoch when
// training runs on a single worker.
TrainReport Train(const EncodedCorpus &corpus, const Vocabulary &vocab,
                  const TrainConfig &config, JointModel *model,
                  const std::function<void(int, double)> &on_epoch = {});

}  // namespace jointsense

#endif  // JOINTSENSE_TRAINER_H_
