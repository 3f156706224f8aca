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

// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "connectivity_oracle.h"
#include "jointsense/annotator.h"
#include "jointsense/embeddings.h"
#include "jointsense/eval.h"
#include "jointsense/statistics.h"
#include "jointsense/trainer.h"
#include "model_checks.h"
#include "stats_oracle.h"
#include "synthetic.h"

namespace jointsense {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

Outcome OracleEquivalence() {
  const int kCases = 2000;
  auto start = Clock::now();
  std::mt19937_64 rng(424242);
  int mismatches = 0;
  for (int i = 0; i < kCases; ++i) {
    testing::RandomProblem rp = testing::MakeRandomProblem(rng);
    testing::OracleResult expected = testing::RunConnectivityOracle(rp.problem);
    Annotator annotator(rp.network, rp.lexicon,
                        ConnectivityParams{rp.problem.delta});
    AnnotatedUnit got = annotator.Connect(rp.problem.tokens);
    if (FormatAnnotatedLine(ToAnnotatedLine(got, rp.network)) !=
            expected.rendered ||
        got.theta != expected.theta || got.pool_size != expected.pool_size) {
      ++mismatches;
    }
  }
  double elapsed = Seconds(start);
  return {mismatches == 0 && elapsed < 60.0,
          std::to_string(kCases) + " cases, " + std::to_string(mismatches) +
              " mismatches, " + Fmt(elapsed) + "s"};
}

Outcome MicroExample() {
  SemanticNetwork net;
  net.AddEdge("s1", "s3");
  net.AddEdge("s2", "s4");
  Lexicon lex;
  lex.Add("bank", {"s1", "s2"});
  lex.Add("water", {"s3"});
  AnnotatedUnit high =
      Annotator(net, lex, ConnectivityParams{100}).Connect({"bank", "water"});
  AnnotatedUnit low =
      Annotator(net, lex, ConnectivityParams{1}).Connect({"bank", "water"});
  std::string a = FormatAnnotatedLine(ToAnnotatedLine(high, net));
  std::string b = FormatAnnotatedLine(ToAnnotatedLine(low, net));
  bool ok = a == "bank|s1 water|s3" && high.theta == 0.025 &&
            b == "bank water";
  return {ok, "delta=100 -> '" + a + "' theta=" + Fmt(high.theta) +
                  ", delta=1 -> '" + b + "'"};
}

// Discards output but counts it, so timing excludes buffer growth.
class CountingBuf : public std::streambuf {
 public:
  size_t count() const { return count_; }

 protected:
  int_type overflow(int_type c) override {
    ++count_;
    return traits_type::not_eof(c);
  }
  std::streamsize xsputn(const char *, std::streamsize n) override {
    count_ += static_cast<size_t>(n);
    return n;
  }

 private:
  size_t count_ = 0;
};

Outcome Linearity() {
  testing::BulkWorld world = testing::MakeBulkWorld(1 << 20, 77);
  Annotator annotator(world.network, world.lexicon);
  std::vector<double> times;
  std::string corpus = world.corpus;
  for (int scale = 0; scale < 3; ++scale) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 5; ++rep) {
      std::istringstream in(corpus);
      CountingBuf sink;
      std::ostream out(&sink);
      auto start = Clock::now();
      AnnotateCorpus(in, out, annotator, 1);
      best = std::min(best, Seconds(start));
      if (sink.count() < corpus.size()) return {false, "short output"};
    }
    times.push_back(best);
    corpus += corpus;
  }
  double r1 = times[1] / times[0];
  double r2 = times[2] / times[1];
  return {r1 <= 2.5 && r2 <= 2.5,
          "1x " + Fmt(times[0]) + "s, 2x " + Fmt(times[1]) + "s, 4x " +
              Fmt(times[2]) + "s; ratios " + Fmt(r1) + ", " + Fmt(r2)};
}

TrainConfig ModeConfig(LayerMode in, LayerMode out, int dim) {
  TrainConfig config;
  config.input_mode = in;
  config.output_mode = out;
  config.dim = dim;
  config.min_count = 1;
  return config;
}

Outcome GradientCheck() {
  auto start = Clock::now();
  std::mt19937_64 rng(31337);
  Vocabulary vocab = testing::MakeVocabulary(10, 12, rng);
  double worst = 0.0;
  int instances = 0;
  for (LayerMode in : testing::kAllModes) {
    for (LayerMode out : testing::kAllModes) {
      JointModel model(vocab, ModeConfig(in, out, 10));
      for (int i = 0; i < 50; ++i) {
        testing::RandomizeState(&model.state(), 0.5, rng);
        TrainingInstance inst =
            testing::RandomInstance(vocab, 1 + rng() % 5, false, rng);
        worst = std::max(worst, testing::MaxGradientError(&model, inst, 1e-4));
        ++instances;
      }
    }
  }
  double elapsed = Seconds(start);
  return {worst < 1e-4 && elapsed < 60.0,
          std::to_string(instances) + " instances, max relative error " +
              Fmt(worst) + ", " + Fmt(elapsed) + "s"};
}

Outcome HsNormalization() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (size_t v : {2, 7, 33, 64}) {
    for (int trial = 0; trial < 20; ++trial) {
      worst = std::max(worst,
                       std::abs(testing::HsProbabilityMass(v, 10, rng) - 1.0));
    }
  }
  return {worst <= 1e-6, "max |mass - 1| = " + Fmt(worst)};
}

Outcome CbowEquivalence() {
  double worst = 0.0;
  for (uint64_t seed : {1, 2, 3}) {
    worst = std::max(worst, testing::CbowMaxDeviation(seed, 1000));
  }
  return {worst <= 1e-10, "max parameter difference " + Fmt(worst)};
}

Outcome VirtualUpdates() {
  std::mt19937_64 rng(8);
  Vocabulary vocab = testing::MakeVocabulary(15, 30, rng);
  size_t mismatches = 0;
  int steps = 0;
  for (LayerMode in : testing::kAllModes) {
    for (LayerMode out : testing::kAllModes) {
      JointModel model(vocab, ModeConfig(in, out, 12));
      testing::RandomizeState(&model.state(), 0.5, rng);
      for (int i = 0; i < 50; ++i) {
        TrainingInstance inst =
            testing::RandomInstance(vocab, 1 + rng() % 6, true, rng);
        mismatches += testing::VirtualUpdateMismatches(&model, inst, 0.05);
        ++steps;
      }
    }
  }
  return {mismatches == 0, std::to_string(steps) + " steps, " +
                               std::to_string(mismatches) +
                               " mismatching rows"};
}

std::vector<double> Centroid(const VectorSpace &space,
                             const std::vector<std::string> &synsets) {
  std::vector<double> sum(space.dim(), 0.0);
  for (const std::string &s : synsets) {
    auto row = space.Find(SenseLabel(s));
    if (!row) continue;
    auto v = space.vector(*row);
    double norm = 0.0;
    for (float x : v) norm += double{x} * x;
    norm = std::sqrt(norm);
    if (norm == 0) continue;
    for (int c = 0; c < space.dim(); ++c) sum[c] += v[c] / norm;
  }
  return sum;
}

double CosineTo(const VectorSpace &space, size_t row,
                const std::vector<double> &target) {
  auto v = space.vector(row);
  double ab = 0, aa = 0, bb = 0;
  for (int c = 0; c < space.dim(); ++c) {
    ab += v[c] * target[c];
    aa += double{v[c]} * v[c];
    bb += target[c] * target[c];
  }
  return aa == 0 || bb == 0 ? 0.0 : ab / std::sqrt(aa * bb);
}

Outcome LearningSanity() {
  auto start = Clock::now();
  int centroid_ok = 0;
  int mcs_ok = 0;
  const int kSeeds = 10;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    testing::TopicWorld world = testing::MakeTopicWorld(seed);
    std::vector<AnnotatedLine> lines =
        testing::AnnotateLines(world.network, world.lexicon, world.lines);
    TrainConfig config;
    config.epochs = 25;
    config.deterministic = true;
    config.seed = seed;
    Vocabulary vocab = Vocabulary::Build(lines, config.min_count);
    JointModel model(vocab, config);
    Train(EncodeCorpus(lines, vocab), vocab, config, &model);
    VectorSpace space(ExportEmbeddings(model.state(), vocab), &world.lexicon);

    auto fish = space.Find(SenseLabel(world.ambiguous_a));
    auto tone = space.Find(SenseLabel(world.ambiguous_b));
    if (fish && tone) {
      std::vector<double> ca = Centroid(space, world.topic_a_synsets);
      std::vector<double> cb = Centroid(space, world.topic_b_synsets);
      if (CosineTo(space, *fish, ca) > CosineTo(space, *fish, cb) &&
          CosineTo(space, *tone, cb) > CosineTo(space, *tone, ca)) {
        ++centroid_ok;
      }
    }
    std::optional<size_t> pick = MostCommonSense(space, world.ambiguous_word);
    if (pick && space.label(*pick) == SenseLabel(world.ambiguous_a)) ++mcs_ok;
  }
  double elapsed = Seconds(start);
  return {centroid_ok >= 9 && mcs_ok >= 9 && elapsed < 300.0,
          "centroid " + std::to_string(centroid_ok) + "/10, mcs " +
              std::to_string(mcs_ok) + "/10, " + Fmt(elapsed) + "s"};
}

Outcome LossDecrease() {
  std::vector<AnnotatedLine> lines = testing::TinyAnnotatedCorpus(12);
  std::string detail;
  bool ok = true;
  for (LayerMode in : testing::kAllModes) {
    for (LayerMode out : testing::kAllModes) {
      TrainConfig config;
      config.input_mode = in;
      config.output_mode = out;
      config.deterministic = true;
      Vocabulary vocab = Vocabulary::Build(lines, config.min_count);
      JointModel model(vocab, config);
      TrainReport report = Train(EncodeCorpus(lines, vocab), vocab, config,
                                 &model);
      bool dropped = report.epoch_loss.size() == 5 &&
                     report.epoch_loss[4] < report.epoch_loss[0];
      ok = ok && dropped;
      if (!dropped) {
        detail += std::string(LayerModeName(in)) + "/" +
                  std::string(LayerModeName(out)) + " ";
      }
    }
  }
  return {ok, ok ? "9/9 configurations" : "no decrease: " + detail};
}

Outcome MetricKernels() {
  const std::vector<double> x = {0.3, 1.7, 2.2, 2.2, 5.0,
                                 -1.0, 4.4, 3.3, 0.0, 9.1};
  const std::vector<double> y = {1.0, 2.0, 1.5, 3.0, 4.5,
                                 0.5, 4.0, 4.0, 2.5, 8.0};
  double dp = std::abs(Pearson(x, y) - testing::OraclePearson(x, y));
  double ds = std::abs(Spearman(x, y) - testing::OracleSpearman(x, y));
  double df = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double p = (i + 1) / 10.0, r = (10 - i) / 11.0;
    df = std::max(df, std::abs(FMeasure(p, r) - testing::OracleF(p, r)));
  }
  std::vector<double> a = {1, 2, 3, 4}, b = {1, 3, 2, 4};
  double rho = Spearman(a, b);
  bool ok = dp <= 1e-9 && ds <= 1e-9 && df <= 1e-9 &&
            std::abs(rho - 0.8) <= 1e-12;
  return {ok, "pearson diff " + Fmt(dp) + ", spearman diff " + Fmt(ds) +
                  ", F diff " + Fmt(df) + ", rho([1,2,3,4],[1,3,2,4]) = " +
                  Fmt(rho)};
}

Outcome GammaGrid() {
  // Positives just above 0.35, negatives just below, so only 0.35 separates.
  Embeddings e;
  e.dim = 2;
  std::vector<ClusterItem> dev;
  auto add = [&](const std::string &id, double c) {
    e.labels.push_back(SenseLabel(id));
    e.values.push_back(static_cast<float>(c));
    e.values.push_back(static_cast<float>(std::sqrt(1 - c * c)));
  };
  add("anchor", 1.0);
  const double cosines[] = {0.37, 0.39, 0.6, 0.34, 0.32, 0.1};
  const int gold[] = {1, 1, 1, 0, 0, 0};
  for (int i = 0; i < 6; ++i) {
    std::string id = "p" + std::to_string(i);
    add(id, cosines[i]);
    dev.push_back({"anchor", id, gold[i]});
  }
  VectorSpace space(e);
  GammaSearch search = TuneGamma(space, dev);
  int at_best = 0;
  for (const auto &[gamma, f] : search.grid) at_best += f == search.f_measure;
  bool ok = search.grid.size() == 21 && search.gamma == kDefaultGamma &&
            at_best == 1;
  return {ok, std::to_string(search.grid.size()) + " thresholds, gamma " +
                  Fmt(search.gamma) + ", F " + Fmt(search.f_measure)};
}

Outcome RoundTrips() {
  testing::TopicWorld world = testing::MakeTopicWorld(3);
  std::vector<AnnotatedLine> lines =
      testing::AnnotateLines(world.network, world.lexicon, world.lines);
  std::string first;
  for (const AnnotatedLine &line : lines) first += FormatAnnotatedLine(line) + "\n";
  std::istringstream in(first);
  std::string second;
  std::string line;
  while (std::getline(in, line)) {
    second += FormatAnnotatedLine(ParseAnnotatedLine(line)) + "\n";
  }
  bool corpus_ok = first == second && first.find('|') != std::string::npos;

  TrainConfig config;
  config.dim = 16;
  config.epochs = 1;
  config.deterministic = true;
  Vocabulary vocab = Vocabulary::Build(lines, config.min_count);
  JointModel model(vocab, config);
  Train(EncodeCorpus(lines, vocab), vocab, config, &model);
  std::ostringstream w1;
  WriteEmbeddings(ExportEmbeddings(model.state(), vocab), w1);
  std::istringstream r1(w1.str());
  std::ostringstream w2;
  WriteEmbeddings(ReadEmbeddings(r1), w2);
  bool vec_ok = w1.str() == w2.str();
  return {corpus_ok && vec_ok,
          "annotated " + std::to_string(first.size()) + " bytes " +
              (corpus_ok ? "identical" : "differ") + ", embeddings " +
              std::to_string(w1.str().size()) + " bytes " +
              (vec_ok ? "identical" : "differ")};
}

}  // namespace
}  // namespace jointsense

// An optional argument runs only the criteria whose name contains it.
int main(int argc, char **argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  using jointsense::Outcome;
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"connectivity oracle equivalence", jointsense::OracleEquivalence},
      {"bank/water micro-example", jointsense::MicroExample},
      {"annotation time linear in corpus size", jointsense::Linearity},
      {"gradient check, nine configurations", jointsense::GradientCheck},
      {"hierarchical softmax normalization", jointsense::HsNormalization},
      {"CBOW reference equivalence", jointsense::CbowEquivalence},
      {"virtual-update equalities", jointsense::VirtualUpdates},
      {"learning sanity on topic corpus", jointsense::LearningSanity},
      {"epoch loss decreases, nine configurations", jointsense::LossDecrease},
      {"metric kernels", jointsense::MetricKernels},
      {"gamma grid", jointsense::GammaGrid},
      {"format round-trips", jointsense::RoundTrips},
  };
  int failures = 0;
  for (const auto &[name, check] : criteria) {
    if (std::string(name).find(filter) == std::string::npos) continue;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": "
              << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
