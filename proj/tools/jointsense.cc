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

// jointsense: annotate a raw corpus with senses, train joint word and sense
// embeddings, and evaluate the resulting space.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jointsense/annotator.h"
#include "jointsense/config.h"
#include "jointsense/embeddings.h"
#include "jointsense/errors.h"
#include "jointsense/eval.h"
#include "jointsense/fileutil.h"
#include "jointsense/model.h"
#include "jointsense/semnet.h"
#include "jointsense/text.h"
#include "jointsense/trainer.h"
#include "jointsense/vocab.h"

namespace jointsense {
namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Re-tags a DataError from `path` as `path:line: detail`.
template <typename Fn>
auto FromFile(const std::string &path, Fn &&fn) {
  try {
    return fn();
  } catch (const DataError &e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line());
    throw DataError(where + ": " + e.detail());
  }
}

template <typename Loader>
auto LoadFile(const std::string &path, Loader &&loader) {
  return FromFile(path, [&]() {
    std::ifstream in = OpenInput(path);
    return loader(in);
  });
}

SemanticNetwork LoadNetwork(const std::string &path) {
  return LoadFile(path, [](std::istream &in) {
    return SemanticNetwork::Load(in);
  });
}

Lexicon LoadLexicon(const std::string &path, const SemanticNetwork *net) {
  return LoadFile(path, [&](std::istream &in) {
    return net ? Lexicon::Load(in, *net) : Lexicon::LoadUnchecked(in);
  });
}

VectorSpace LoadSpace(const std::string &embeddings_path,
                      const Lexicon *lexicon) {
  Embeddings e = LoadFile(embeddings_path, [](std::istream &in) {
    return ReadEmbeddings(in);
  });
  return VectorSpace(std::move(e), lexicon);
}

void CheckOut(const std::string &path) {
  try {
    CheckOutputPath(path);
  } catch (const DataError &e) {
    throw UsageError(e.what());
  }
}

struct AnnotateArgs {
  std::string corpus, edges, lexicon, out, stats;
  double delta = 100.0;
  int threads = 1;
};

struct StatsArgs {
  std::string corpus, edges, lexicon, out;
};

struct TrainArgs {
  std::string annotated, out, loss_log;
  std::string input_mode = "senses";
  std::string output_mode = "both";
  TrainConfig config;
  std::optional<uint64_t> seed;
};

struct EvalArgs {
  std::string embeddings, lexicon, edges, dataset, label;
  std::string strategy = "closest-sense";
  double gamma = kDefaultGamma;
  size_t k = 10;
};

void RunAnnotate(const AnnotateArgs &args) {
  CheckOut(args.out);
  if (!args.stats.empty()) CheckOut(args.stats);
  SemanticNetwork net = LoadNetwork(args.edges);
  Lexicon lexicon = LoadLexicon(args.lexicon, &net);
  ConnectivityParams params;
  params.delta = args.delta;
  Annotator annotator(net, lexicon, params);

  AtomicFile out(args.out);
  CorpusStats stats = FromFile(args.corpus, [&]() {
    std::ifstream in = OpenInput(args.corpus);
    return AnnotateCorpus(in, out.stream(), annotator, args.threads);
  });
  out.Commit();
  if (!args.stats.empty()) {
    AtomicFile stats_out(args.stats);
    WriteCorpusStats(stats, stats_out.stream());
    stats_out.Commit();
  }
  std::cerr << "annotated " << stats.units << " units, " << stats.tokens
            << " tokens, " << stats.connected_mentions
            << " connected mentions\n";
}

void RunStats(const StatsArgs &args) {
  if (!args.out.empty()) CheckOut(args.out);
  SemanticNetwork net = LoadNetwork(args.edges);
  Lexicon lexicon = LoadLexicon(args.lexicon, &net);
  CorpusStats stats = LoadFile(args.corpus, [&](std::istream &in) {
    return ComputeCorpusStats(in, lexicon);
  });
  if (!stats.alpha_defined()) {
    std::cerr << "warning: no token has candidate senses; alpha set to 0\n";
  }
  if (args.out.empty()) {
    WriteCorpusStats(stats, std::cout);
  } else {
    AtomicFile out(args.out);
    WriteCorpusStats(stats, out.stream());
    out.Commit();
  }
}

void RunTrain(TrainArgs args) {
  TrainConfig &config = args.config;
  config.input_mode = ParseLayerMode(args.input_mode);
  config.output_mode = ParseLayerMode(args.output_mode);
  if (config.deterministic && !args.seed) {
    throw UsageError("--deterministic requires --seed");
  }
  if (args.seed) {
    config.seed = *args.seed;
  } else {
    config.seed = std::random_device{}();
    std::cerr << "seed=" << config.seed << '\n';
  }
  config.Validate();
  CheckOut(args.out);
  if (!args.loss_log.empty()) CheckOut(args.loss_log);

  Vocabulary vocab = LoadFile(args.annotated, [&](std::istream &in) {
    return Vocabulary::Build(in, config.min_count);
  });
  EncodedCorpus corpus = LoadFile(args.annotated, [&](std::istream &in) {
    return EncodeCorpus(in, vocab);
  });
  std::cerr << "vocabulary: " << vocab.words().size() << " words, "
            << vocab.senses().size() << " senses; " << corpus.positions
            << " training positions\n";

  JointModel model(vocab, config);
  TrainReport report = Train(corpus, vocab, config, &model,
                             [](int epoch, double loss) {
                               std::cerr << "epoch " << epoch + 1
                                         << " loss=" << FormatDouble(loss)
                                         << '\n';
                             });
  if (!model.state().AllFinite()) {
    throw DataError("training diverged: non-finite parameters");
  }

  AtomicFile out(args.out);
  WriteEmbeddings(ExportEmbeddings(model.state(), vocab), out.stream());
  out.Commit();
  if (!args.loss_log.empty()) {
    AtomicFile log(args.loss_log);
    for (size_t e = 0; e < report.epoch_loss.size(); ++e) {
      log.stream() << "epoch=" << e + 1
                   << " loss=" << FormatDouble(report.epoch_loss[e])
                   << " steps=" << report.epoch_steps[e] << '\n';
    }
    log.Commit();
  }
}

std::optional<SemanticNetwork> MaybeNetwork(const std::string &edges) {
  if (edges.empty()) return std::nullopt;
  return LoadNetwork(edges);
}

void RunEvalSim(const EvalArgs &args) {
  SimilarityStrategy strategy = ParseSimilarityStrategy(args.strategy);
  std::optional<SemanticNetwork> net = MaybeNetwork(args.edges);
  std::optional<Lexicon> lexicon;
  if (!args.lexicon.empty()) {
    lexicon = LoadLexicon(args.lexicon, net ? &*net : nullptr);
  } else if (strategy == SimilarityStrategy::kClosestSense) {
    throw UsageError("closest-sense similarity requires --lexicon");
  }
  VectorSpace space = LoadSpace(args.embeddings, lexicon ? &*lexicon : nullptr);
  auto dataset = LoadFile(args.dataset, [](std::istream &in) {
    return ReadSimilarityDataset(in);
  });
  PrintReport(FromFile(args.dataset,
                       [&]() {
                         return EvaluateSimilarity(space, dataset, strategy);
                       }),
              std::cout);
}

void RunEvalCluster(const EvalArgs &args) {
  VectorSpace space = LoadSpace(args.embeddings, nullptr);
  auto dataset = LoadFile(args.dataset, [](std::istream &in) {
    return ReadClusteringDataset(in);
  });
  PrintReport(FromFile(args.dataset,
                       [&]() {
                         return EvaluateClustering(space, dataset, args.gamma);
                       }),
              std::cout);
}

void RunTuneGamma(const EvalArgs &args) {
  VectorSpace space = LoadSpace(args.embeddings, nullptr);
  auto dataset = LoadFile(args.dataset, [](std::istream &in) {
    return ReadClusteringDataset(in);
  });
  PrintReport(
      FromFile(args.dataset, [&]() { return TuneGamma(space, dataset); }),
      std::cout);
}

void RunEvalMcs(const EvalArgs &args) {
  std::optional<SemanticNetwork> net = MaybeNetwork(args.edges);
  Lexicon lexicon = LoadLexicon(args.lexicon, net ? &*net : nullptr);
  VectorSpace space = LoadSpace(args.embeddings, &lexicon);
  auto dataset = LoadFile(args.dataset, [](std::istream &in) {
    return ReadWsdDataset(in);
  });
  PrintReport(EvaluateMcs(space, dataset), std::cout);
}

void RunNearest(const EvalArgs &args) {
  VectorSpace space = LoadSpace(args.embeddings, nullptr);
  if (!space.Find(args.label)) {
    throw UsageError("label '" + args.label + "' is not in the space");
  }
  for (const Neighbor &n : NearestNeighbors(space, args.label, args.k)) {
    std::cout << n.label << '\t' << FormatDouble(n.cosine) << '\n';
  }
}

// Finds `--config F` / `--config=F` in the raw arguments.
std::optional<std::string> FindConfigPath(const std::vector<std::string> &argv) {
  for (size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--config" && i + 1 < argv.size()) return argv[i + 1];
    if (argv[i].rfind("--config=", 0) == 0) return argv[i].substr(9);
  }
  return std::nullopt;
}

bool GivenOnCommandLine(const std::vector<std::string> &argv,
                        const std::string &flag) {
  for (const std::string &arg : argv) {
    if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Appends config-file values for options not given on the command line.
std::vector<std::string> MergeConfig(const std::vector<std::string> &argv,
                                     CLI::App &app) {
  std::optional<std::string> path = FindConfigPath(argv);
  if (!path) return argv;
  CLI::App *sub = nullptr;
  for (CLI::App *candidate : app.get_subcommands({})) {
    if (!argv.empty() && candidate->get_name() == argv[0]) sub = candidate;
  }
  if (sub == nullptr) throw UsageError("--config needs a subcommand first");
  PipelineConfig config = LoadFile(*path, [](std::istream &in) {
    return PipelineConfig::Load(in);
  });
  std::vector<std::string> merged = argv;
  for (const auto &[key, value] : config.values()) {
    std::string flag = "--" + key;
    const CLI::Option *opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || key == "config") {
      throw UsageError(*path + ": unknown key '" + key + "' for " +
                       sub->get_name());
    }
    if (GivenOnCommandLine(argv, flag)) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1") {
        merged.push_back(flag);
      } else if (value != "false" && value != "0") {
        throw UsageError(*path + ": flag '" + key + "' takes true or false");
      }
      continue;
    }
    merged.push_back(flag);
    merged.push_back(value);
  }
  return merged;
}

int Main(int argc, char **argv) {
  CLI::App app{"Joint word and sense embeddings from a semantic network"};
  app.require_subcommand(1);
  std::string config_path;

  auto add_config = [&](CLI::App *sub) {
    sub->add_option("--config", config_path,
                    "key=value file; command-line flags take precedence");
  };
  auto existing = [](CLI::Option *opt) { opt->check(CLI::ExistingFile); };

  AnnotateArgs annotate;
  CLI::App *annotate_cmd =
      app.add_subcommand("annotate", "Connect corpus words to senses");
  existing(annotate_cmd->add_option("--corpus", annotate.corpus,
                                    "Raw corpus, one unit per line")
               ->required());
  existing(annotate_cmd->add_option("--edges", annotate.edges,
                                    "Semantic network edge file")
               ->required());
  existing(annotate_cmd->add_option("--lexicon", annotate.lexicon,
                                    "Surface form to synset lexicon")
               ->required());
  annotate_cmd->add_option("--delta", annotate.delta,
                           "Threshold parameter (higher = more recall)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  annotate_cmd->add_option("--out", annotate.out, "Annotated corpus output")
      ->required();
  annotate_cmd->add_option("--threads", annotate.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  annotate_cmd->add_option("--stats", annotate.stats,
                           "Write corpus statistics (key=value) here");
  add_config(annotate_cmd);

  StatsArgs stats;
  CLI::App *stats_cmd =
      app.add_subcommand("stats", "Token count and average polysemy");
  existing(stats_cmd->add_option("--corpus", stats.corpus, "Raw corpus")
               ->required());
  existing(stats_cmd->add_option("--edges", stats.edges,
                                 "Semantic network edge file")
               ->required());
  existing(stats_cmd->add_option("--lexicon", stats.lexicon, "Lexicon file")
               ->required());
  stats_cmd->add_option("--out", stats.out, "Output file (default stdout)");
  add_config(stats_cmd);

  TrainArgs train;
  CLI::App *train_cmd =
      app.add_subcommand("train", "Train joint word and sense embeddings");
  existing(train_cmd->add_option("--annotated", train.annotated,
                                 "Annotated corpus")
               ->required());
  train_cmd->add_option("--input-mode", train.input_mode,
                        "words | senses | both")
      ->capture_default_str();
  train_cmd->add_option("--output-mode", train.output_mode,
                        "words | senses | both")
      ->capture_default_str();
  train_cmd->add_option("--dim", train.config.dim, "Vector dimension")
      ->capture_default_str();
  train_cmd->add_option("--window", train.config.window, "Context window")
      ->capture_default_str();
  train_cmd->add_option("--epochs", train.config.epochs, "Passes over corpus")
      ->capture_default_str();
  train_cmd->add_option("--min-count", train.config.min_count,
                        "Drop words and senses rarer than this")
      ->capture_default_str();
  train_cmd->add_option("--lr", train.config.learning_rate,
                        "Initial learning rate")
      ->capture_default_str();
  train_cmd->add_option("--threads", train.config.threads,
                        "Worker threads (ignored with --deterministic)")
      ->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Random seed");
  train_cmd->add_flag("--deterministic", train.config.deterministic,
                      "Single worker, fixed window; requires --seed");
  train_cmd->add_option("--sample", train.config.sample,
                        "Frequent-word subsampling threshold (0 = off)")
      ->capture_default_str();
  train_cmd->add_option("--out", train.out, "Embedding file output")
      ->required();
  train_cmd->add_option("--loss-log", train.loss_log,
                        "Write per-epoch mean loss here");
  add_config(train_cmd);

  EvalArgs eval;
  CLI::App *sim_cmd =
      app.add_subcommand("eval-sim", "Word similarity correlation");
  existing(sim_cmd->add_option("--embeddings", eval.embeddings,
                               "Embedding file")
               ->required());
  existing(sim_cmd->add_option("--lexicon", eval.lexicon,
                               "Lexicon for candidate senses"));
  existing(sim_cmd->add_option("--edges", eval.edges,
                               "Validate the lexicon against this network"));
  existing(sim_cmd->add_option("--dataset", eval.dataset,
                               "word1<TAB>word2<TAB>score")
               ->required());
  sim_cmd->add_option("--strategy", eval.strategy, "closest-sense | word")
      ->capture_default_str();
  add_config(sim_cmd);

  CLI::App *cluster_cmd =
      app.add_subcommand("eval-cluster", "Sense clustering at threshold");
  existing(cluster_cmd->add_option("--embeddings", eval.embeddings,
                                   "Embedding file")
               ->required());
  existing(cluster_cmd->add_option("--dataset", eval.dataset,
                                   "synset1<TAB>synset2<TAB>{0|1}")
               ->required());
  cluster_cmd->add_option("--gamma", eval.gamma, "Cluster iff cosine > gamma")
      ->capture_default_str();
  add_config(cluster_cmd);

  CLI::App *tune_cmd = app.add_subcommand(
      "tune-gamma", "Pick the clustering threshold on a dev set");
  existing(tune_cmd->add_option("--embeddings", eval.embeddings,
                                "Embedding file")
               ->required());
  existing(tune_cmd->add_option("--dataset", eval.dataset,
                                "synset1<TAB>synset2<TAB>{0|1}")
               ->required());
  add_config(tune_cmd);

  CLI::App *mcs_cmd =
      app.add_subcommand("eval-mcs", "Most common sense F-measure");
  existing(mcs_cmd->add_option("--embeddings", eval.embeddings,
                               "Embedding file")
               ->required());
  existing(mcs_cmd->add_option("--lexicon", eval.lexicon,
                               "Lexicon for candidate senses")
               ->required());
  existing(mcs_cmd->add_option("--edges", eval.edges,
                               "Validate the lexicon against this network"));
  existing(mcs_cmd->add_option("--dataset", eval.dataset,
                               "id<TAB>lemma<TAB>gold1,gold2,...")
               ->required());
  add_config(mcs_cmd);

  CLI::App *nn_cmd =
      app.add_subcommand("nn", "Nearest words and senses to a label");
  existing(nn_cmd->add_option("--embeddings", eval.embeddings,
                              "Embedding file")
               ->required());
  nn_cmd->add_option("--label", eval.label, "Query label (senses: s#<id>)")
      ->required();
  nn_cmd->add_option("--k", eval.k, "Number of neighbors")
      ->capture_default_str();
  add_config(nn_cmd);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = MergeConfig(args, app);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }

  try {
    if (annotate_cmd->parsed()) RunAnnotate(annotate);
    if (stats_cmd->parsed()) RunStats(stats);
    if (train_cmd->parsed()) RunTrain(train);
    if (sim_cmd->parsed()) RunEvalSim(eval);
    if (cluster_cmd->parsed()) RunEvalCluster(eval);
    if (tune_cmd->parsed()) RunTuneGamma(eval);
    if (mcs_cmd->parsed()) RunEvalMcs(eval);
    if (nn_cmd->parsed()) RunNearest(eval);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}

}  // namespace
}  // namespace jointsense

int main(int argc, char **argv) { return jointsense::Main(argc, argv); }
