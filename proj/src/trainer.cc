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

#include "jointsense/trainer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <thread>

#include "jointsense/errors.h"

namespace jointsense {

EncodedUnit EncodeLine(const AnnotatedLine &line, const Vocabulary &vocab) {
  EncodedUnit unit;
  unit.reserve(line.size());
  for (const AnnotatedToken &token : line) {
    ContextPosition pos;
    pos.word = vocab.WordIndex(token.form);
    for (const SynsetId &s : token.senses) {
      int32_t index = vocab.SenseIndex(s);
      if (index >= 0) pos.senses.push_back(index);
    }
    if (pos.word < 0 && pos.senses.empty()) continue;
    unit.push_back(std::move(pos));
  }
  return unit;
}

namespace {

void AddUnit(EncodedUnit unit, EncodedCorpus *corpus) {
  if (unit.empty()) return;
  corpus->positions += unit.size();
  corpus->units.push_back(std::move(unit));
}

}  // namespace

EncodedCorpus EncodeCorpus(std::istream &annotated, const Vocabulary &vocab) {
  EncodedCorpus corpus;
  std::string line;
  size_t line_no = 0;
  while (std::getline(annotated, line)) {
    ++line_no;
    AddUnit(EncodeLine(ParseAnnotatedLine(line, line_no), vocab), &corpus);
  }
  if (annotated.bad()) {
    throw DataError("read failure after line " + std::to_string(line_no));
  }
  return corpus;
}

EncodedCorpus EncodeCorpus(std::span<const AnnotatedLine> lines,
                           const Vocabulary &vocab) {
  EncodedCorpus corpus;
  for (const AnnotatedLine &line : lines) {
    AddUnit(EncodeLine(line, vocab), &corpus);
  }
  return corpus;
}

void MakeInstanceAt(const EncodedUnit &unit, size_t target, int span,
                    TrainingInstance *instance) {
  const ContextPosition &center = unit[target];
  instance->target_word = center.word;
  instance->target_senses = center.senses;
  instance->context.clear();
  size_t lo = target >= static_cast<size_t>(span) ? target - span : 0;
  size_t hi = std::min(unit.size(), target + static_cast<size_t>(span) + 1);
  for (size_t i = lo; i < hi; ++i) {
    if (i != target) instance->context.push_back(unit[i]);
  }
}

std::vector<TrainingInstance> MakeInstances(const EncodedUnit &unit,
                                            int window, bool deterministic,
                                            std::mt19937_64 &rng) {
  std::vector<TrainingInstance> instances(unit.size());
  std::uniform_int_distribution<int> span_dist(1, window);
  for (size_t t = 0; t < unit.size(); ++t) {
    int span = deterministic ? window : span_dist(rng);
    MakeInstanceAt(unit, t, span, &instances[t]);
  }
  return instances;
}

double ScheduledLearningRate(double initial, size_t processed, size_t total) {
  double rate = initial * (1.0 - static_cast<double>(processed) /
                                     (static_cast<double>(total) + 1.0));
  return std::max(rate, initial * 1e-4);
}

namespace {

struct WorkerTotals {
  std::vector<double> loss;
  std::vector<size_t> steps;
  size_t skipped = 0;
};

// Probability of keeping an occurrence of a word with corpus count `count`.
double KeepProbability(double sample, double total_words, double count) {
  double threshold = sample * total_words;
  return (std::sqrt(count / threshold) + 1.0) * threshold / count;
}

}  // namespace

TrainReport Train(const EncodedCorpus &corpus, const Vocabulary &vocab,
                  const TrainConfig &config, JointModel *model,
                  const std::function<void(int, double)> &on_epoch) {
  config.Validate();
  const int workers =
      config.deterministic
          ? 1
          : std::max(1, std::min<int>(config.threads,
                                      static_cast<int>(corpus.units.size())));
  const size_t total =
      static_cast<size_t>(config.epochs) * corpus.positions;
  double total_words = 0.0;
  for (const VocabEntry &e : vocab.words()) total_words += e.count;

  std::atomic<size_t> processed{0};
  std::vector<WorkerTotals> totals(workers);

  auto run_shard = [&](int worker, int epoch, std::mt19937_64 &rng,
                       StepScratch &scratch, TrainingInstance &instance,
                       EncodedUnit &kept) {
    WorkerTotals &out = totals[worker];
    std::uniform_int_distribution<int> span_dist(1, config.window);
    size_t begin = corpus.units.size() * worker / workers;
    size_t end = corpus.units.size() * (worker + 1) / workers;
    for (size_t u = begin; u < end; ++u) {
      const EncodedUnit *unit = &corpus.units[u];
      if (config.sample > 0) {
        kept.clear();
        for (const ContextPosition &pos : *unit) {
          if (pos.word >= 0) {
            double p = KeepProbability(config.sample, total_words,
                                       vocab.words()[pos.word].count);
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (p < r) continue;
          }
          kept.push_back(pos);
        }
        unit = &kept;
      }
      size_t seen = processed.load(std::memory_order_relaxed);
      for (size_t t = 0; t < unit->size(); ++t) {
        double lr = ScheduledLearningRate(config.learning_rate, seen + t,
                                          total);
        int span = config.deterministic ? config.window : span_dist(rng);
        MakeInstanceAt(*unit, t, span, &instance);
        StepResult step = model->Step(instance, lr, &scratch);
        if (step.skipped) {
          ++out.skipped;
        } else {
          out.loss[epoch] += step.loss;
          ++out.steps[epoch];
        }
      }
      processed.fetch_add(corpus.units[u].size(), std::memory_order_relaxed);
    }
  };

  for (WorkerTotals &t : totals) {
    t.loss.assign(config.epochs, 0.0);
    t.steps.assign(config.epochs, 0);
  }

  auto worker_main = [&](int worker) {
    std::mt19937_64 rng(config.seed + 0x9e3779b97f4a7c15ULL * (worker + 1));
    StepScratch scratch;
    TrainingInstance instance;
    EncodedUnit kept;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      run_shard(worker, epoch, rng, scratch, instance, kept);
      if (workers == 1 && on_epoch) {
        size_t steps = totals[0].steps[epoch];
        on_epoch(epoch, steps ? totals[0].loss[epoch] / steps : 0.0);
      }
    }
  };

  if (workers == 1) {
    worker_main(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker_main, w);
  }

  TrainReport report;
  report.epoch_loss.assign(config.epochs, 0.0);
  report.epoch_steps.assign(config.epochs, 0);
  for (const WorkerTotals &t : totals) {
    for (int e = 0; e < config.epochs; ++e) {
      report.epoch_loss[e] += t.loss[e];
      report.epoch_steps[e] += t.steps[e];
    }
    report.skipped += t.skipped;
  }
  for (int e = 0; e < config.epochs; ++e) {
    if (report.epoch_steps[e] > 0) report.epoch_loss[e] /= report.epoch_steps[e];
  }
  return report;
}

}  // namespace jointsense
