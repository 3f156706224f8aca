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

#include "jointsense/eval.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <sstream>
#include <ostream>
#include <stdexcept>

#include "jointsense/errors.h"
#include "jointsense/statistics.h"
#include "jointsense/text.h"

namespace jointsense {

VectorSpace::VectorSpace(Embeddings embeddings, const Lexicon *lexicon)
    : embeddings_(std::move(embeddings)) {
  norms_.reserve(size());
  for (size_t i = 0; i < size(); ++i) {
    double sum = 0.0;
    for (float v : vector(i)) sum += static_cast<double>(v) * v;
    norms_.push_back(std::sqrt(sum));
    index_.emplace(embeddings_.labels[i], i);
  }
  if (lexicon == nullptr) return;
  for (const auto &[form, ids] : lexicon->entries()) {
    std::vector<size_t> rows;
    for (const SynsetId &id : ids) {
      auto it = index_.find(SenseLabel(id));
      if (it != index_.end()) rows.push_back(it->second);
    }
    if (!rows.empty()) candidates_.emplace(form, std::move(rows));
  }
}

std::optional<size_t> VectorSpace::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<size_t> &VectorSpace::Candidates(
    std::string_view word) const {
  static const std::vector<size_t> kNone;
  auto it = candidates_.find(std::string(word));
  return it == candidates_.end() ? kNone : it->second;
}

double VectorSpace::Cosine(size_t a, size_t b) const {
  if (norms_[a] == 0.0 || norms_[b] == 0.0) return 0.0;
  double dot = 0.0;
  std::span<const float> x = vector(a);
  std::span<const float> y = vector(b);
  for (size_t i = 0; i < x.size(); ++i) {
    dot += static_cast<double>(x[i]) * y[i];
  }
  return std::clamp(dot / (norms_[a] * norms_[b]), -1.0, 1.0);
}

std::optional<double> ClosestSenseSimilarity(const VectorSpace &space,
                                             std::string_view w1,
                                             std::string_view w2) {
  const auto &c1 = space.Candidates(w1);
  const auto &c2 = space.Candidates(w2);
  if (c1.empty() || c2.empty()) return std::nullopt;
  double best = -1.0;
  for (size_t a : c1) {
    for (size_t b : c2) best = std::max(best, space.Cosine(a, b));
  }
  return best;
}

std::optional<double> WordCosineSimilarity(const VectorSpace &space,
                                           std::string_view w1,
                                           std::string_view w2) {
  auto a = space.Find(w1);
  auto b = space.Find(w2);
  if (!a || !b) return std::nullopt;
  return space.Cosine(*a, *b);
}

SimilarityStrategy ParseSimilarityStrategy(std::string_view name) {
  if (name == "closest-sense") return SimilarityStrategy::kClosestSense;
  if (name == "word") return SimilarityStrategy::kWord;
  throw UsageError("strategy must be closest-sense or word, got '" +
                   std::string(name) + "'");
}

namespace {

// Reads non-empty, non-comment lines as exactly `fields` tab-separated
// columns.
template <typename Fn>
void ForEachRow(std::istream &in, size_t fields, Fn &&fn) {
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = StripCarriageReturn(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != fields) {
      throw DataError("expected " + std::to_string(fields) +
                          " tab-separated fields",
                      line_no);
    }
    fn(cols, line_no);
  }
  if (in.bad()) throw DataError("read failure", line_no);
}

bool UsesZero(const VectorSpace &space, std::string_view w1,
              std::string_view w2, SimilarityStrategy strategy) {
  auto zero = [&](std::string_view w) {
    if (strategy == SimilarityStrategy::kWord) {
      auto i = space.Find(w);
      return i && space.IsZero(*i);
    }
    const auto &c = space.Candidates(w);
    return std::any_of(c.begin(), c.end(),
                       [&](size_t r) { return space.IsZero(r); });
  };
  return zero(w1) || zero(w2);
}

}  // namespace

std::vector<SimilarityItem> ReadSimilarityDataset(std::istream &in) {
  std::vector<SimilarityItem> items;
  ForEachRow(in, 3, [&](const std::vector<std::string> &cols, size_t line) {
    SimilarityItem item{ToLower(cols[0]), ToLower(cols[1]), 0.0};
    if (!ParseDouble(cols[2], &item.gold) || !std::isfinite(item.gold)) {
      throw DataError("bad gold score '" + cols[2] + "'", line);
    }
    items.push_back(std::move(item));
  });
  return items;
}

SimilarityReport EvaluateSimilarity(const VectorSpace &space,
                                    std::span<const SimilarityItem> dataset,
                                    SimilarityStrategy strategy) {
  SimilarityReport report;
  report.total = dataset.size();
  std::vector<double> model;
  std::vector<double> gold;
  for (const SimilarityItem &item : dataset) {
    std::optional<double> score =
        strategy == SimilarityStrategy::kClosestSense
            ? ClosestSenseSimilarity(space, item.w1, item.w2)
            : WordCosineSimilarity(space, item.w1, item.w2);
    if (!score) {
      report.excluded.push_back(item.w1 + "\t" + item.w2);
      continue;
    }
    if (UsesZero(space, item.w1, item.w2, strategy)) {
      ++report.zero_vector_pairs;
    }
    model.push_back(*score);
    gold.push_back(item.gold);
  }
  report.evaluated = model.size();
  if (model.empty()) throw DataError("empty evaluation: no pair is covered");
  if (model.size() < 2) {
    throw DataError("need at least two covered pairs for a correlation");
  }
  report.pearson = Pearson(model, gold);
  report.spearman = Spearman(model, gold);
  return report;
}

std::vector<ClusterItem> ReadClusteringDataset(std::istream &in) {
  std::vector<ClusterItem> items;
  ForEachRow(in, 3, [&](const std::vector<std::string> &cols, size_t line) {
    if (cols[2] != "0" && cols[2] != "1") {
      throw DataError("gold label must be 0 or 1", line);
    }
    items.push_back({cols[0], cols[1], cols[2] == "1" ? 1 : 0});
  });
  return items;
}

double ClusteringReport::accuracy() const {
  size_t n = evaluated();
  return n == 0 ? 0.0 : static_cast<double>(tp + tn) / n;
}

double ClusteringReport::accuracy_all() const {
  return total == 0 ? 0.0 : static_cast<double>(tp + tn) / total;
}

double ClusteringReport::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
}

double ClusteringReport::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
}

double ClusteringReport::f_measure() const {
  return FMeasure(precision(), recall());
}

ClusteringReport ScoreClustering(std::span<const double> cosines,
                                 std::span<const int> gold, double gamma) {
  if (cosines.size() != gold.size()) {
    throw std::invalid_argument("scores and labels differ in length");
  }
  ClusteringReport report;
  report.gamma = gamma;
  report.total = cosines.size();
  for (size_t i = 0; i < cosines.size(); ++i) {
    bool predicted = cosines[i] > gamma;
    bool actual = gold[i] == 1;
    if (predicted && actual) ++report.tp;
    if (predicted && !actual) ++report.fp;
    if (!predicted && actual) ++report.fn;
    if (!predicted && !actual) ++report.tn;
  }
  return report;
}

namespace {

void CoveredClusterScores(const VectorSpace &space,
                          std::span<const ClusterItem> dataset,
                          std::vector<double> *cosines, std::vector<int> *gold,
                          std::vector<std::string> *excluded) {
  for (const ClusterItem &item : dataset) {
    auto a = space.Find(SenseLabel(item.synset1));
    auto b = space.Find(SenseLabel(item.synset2));
    if (!a || !b) {
      excluded->push_back(item.synset1 + "\t" + item.synset2);
      continue;
    }
    cosines->push_back(space.Cosine(*a, *b));
    gold->push_back(item.gold);
  }
}

}  // namespace

ClusteringReport EvaluateClustering(const VectorSpace &space,
                                    std::span<const ClusterItem> dataset,
                                    double gamma) {
  std::vector<double> cosines;
  std::vector<int> gold;
  std::vector<std::string> excluded;
  CoveredClusterScores(space, dataset, &cosines, &gold, &excluded);
  if (cosines.empty()) throw DataError("empty evaluation: no pair is covered");
  ClusteringReport report = ScoreClustering(cosines, gold, gamma);
  report.total = dataset.size();
  report.excluded = std::move(excluded);
  return report;
}

GammaSearch TuneGammaFromScores(std::span<const double> cosines,
                                std::span<const int> gold) {
  if (cosines.empty()) throw DataError("empty development set");
  GammaSearch search;
  search.f_measure = -1.0;
  for (int step = 0; step <= kGammaGridSteps; ++step) {
    double gamma = static_cast<double>(step) / kGammaGridSteps;
    double f = ScoreClustering(cosines, gold, gamma).f_measure();
    search.grid.emplace_back(gamma, f);
    if (f > search.f_measure) {
      search.f_measure = f;
      search.gamma = gamma;
    }
  }
  return search;
}

GammaSearch TuneGamma(const VectorSpace &space,
                      std::span<const ClusterItem> dev) {
  std::vector<double> cosines;
  std::vector<int> gold;
  std::vector<std::string> excluded;
  CoveredClusterScores(space, dev, &cosines, &gold, &excluded);
  return TuneGammaFromScores(cosines, gold);
}

std::optional<size_t> MostCommonSense(const VectorSpace &space,
                                      std::string_view word) {
  auto w = space.Find(word);
  const auto &candidates = space.Candidates(word);
  if (!w || candidates.empty()) return std::nullopt;
  size_t best = candidates.front();
  double best_cos = space.Cosine(*w, best);
  for (size_t i = 1; i < candidates.size(); ++i) {
    double c = space.Cosine(*w, candidates[i]);
    if (c > best_cos) {
      best_cos = c;
      best = candidates[i];
    }
  }
  return best;
}

std::vector<WsdItem> ReadWsdDataset(std::istream &in) {
  std::vector<WsdItem> items;
  ForEachRow(in, 3, [&](const std::vector<std::string> &cols, size_t line) {
    WsdItem item{cols[0], ToLower(cols[1]), Split(cols[2], ',')};
    for (const std::string &g : item.gold) {
      if (!IsValidSynsetId(g)) {
        throw DataError("bad gold sense '" + g + "'", line);
      }
    }
    items.push_back(std::move(item));
  });
  return items;
}

double McsReport::precision() const {
  return attempted == 0 ? 0.0 : static_cast<double>(correct) / attempted;
}

double McsReport::recall() const {
  return total == 0 ? 0.0 : static_cast<double>(correct) / total;
}

double McsReport::f_measure() const { return FMeasure(precision(), recall()); }

McsReport EvaluateMcs(const VectorSpace &space,
                      std::span<const WsdItem> dataset) {
  McsReport report;
  report.total = dataset.size();
  for (const WsdItem &item : dataset) {
    std::optional<size_t> sense = MostCommonSense(space, item.lemma);
    if (!sense) {
      report.excluded.push_back(item.id);
      continue;
    }
    ++report.attempted;
    std::string_view synset =
        std::string_view(space.label(*sense)).substr(kSensePrefix.size());
    if (std::find(item.gold.begin(), item.gold.end(), synset) !=
        item.gold.end()) {
      ++report.correct;
    }
  }
  return report;
}

std::vector<Neighbor> NearestNeighbors(const VectorSpace &space,
                                       std::string_view label, size_t k) {
  auto query = space.Find(label);
  if (!query) {
    throw std::out_of_range("label '" + std::string(label) +
                            "' is not in the space");
  }
  std::vector<std::pair<double, size_t>> scored;
  scored.reserve(space.size());
  for (size_t i = 0; i < space.size(); ++i) {
    if (i != *query) scored.emplace_back(space.Cosine(*query, i), i);
  }
  auto better = [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  };
  k = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + k, scored.end(), better);
  std::vector<Neighbor> result;
  for (size_t i = 0; i < k; ++i) {
    result.push_back({space.label(scored[i].second), scored[i].first});
  }
  return result;
}

namespace {

std::string Fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

void PrintReport(const SimilarityReport &report, std::ostream &out) {
  out << "metric      value\n"
      << "pearson     " << Fixed(report.pearson) << '\n'
      << "spearman    " << Fixed(report.spearman) << '\n'
      << "coverage    " << report.evaluated << '/' << report.total << '\n';
  for (const std::string &pair : report.excluded) {
    out << "# excluded\t" << pair << '\n';
  }
  out << "pearson=" << FormatDouble(report.pearson) << '\n'
      << "spearman=" << FormatDouble(report.spearman) << '\n'
      << "evaluated=" << report.evaluated << '\n'
      << "total=" << report.total << '\n'
      << "coverage=" << FormatDouble(report.coverage()) << '\n'
      << "zero_vector_pairs=" << report.zero_vector_pairs << '\n';
}

void PrintReport(const ClusteringReport &report, std::ostream &out) {
  out << "metric        value\n"
      << "gamma         " << Fixed(report.gamma, 2) << '\n'
      << "accuracy      " << Fixed(report.accuracy()) << '\n'
      << "accuracy_all  " << Fixed(report.accuracy_all()) << '\n'
      << "precision     " << Fixed(report.precision()) << '\n'
      << "recall        " << Fixed(report.recall()) << '\n'
      << "f_measure     " << Fixed(report.f_measure()) << '\n'
      << "coverage      " << report.evaluated() << '/' << report.total << '\n';
  for (const std::string &pair : report.excluded) {
    out << "# excluded\t" << pair << '\n';
  }
  out << "gamma=" << FormatDouble(report.gamma) << '\n'
      << "tp=" << report.tp << "\nfp=" << report.fp << "\nfn=" << report.fn
      << "\ntn=" << report.tn << '\n'
      << "accuracy=" << FormatDouble(report.accuracy()) << '\n'
      << "accuracy_all=" << FormatDouble(report.accuracy_all()) << '\n'
      << "precision=" << FormatDouble(report.precision()) << '\n'
      << "recall=" << FormatDouble(report.recall()) << '\n'
      << "f_measure=" << FormatDouble(report.f_measure()) << '\n'
      << "evaluated=" << report.evaluated() << '\n'
      << "total=" << report.total << '\n';
}

void PrintReport(const GammaSearch &search, std::ostream &out) {
  out << "gamma  F\n";
  for (const auto &[gamma, f] : search.grid) {
    out << Fixed(gamma, 2) << "   " << Fixed(f) << '\n';
  }
  out << "gamma=" << FormatDouble(search.gamma) << '\n'
      << "f_measure=" << FormatDouble(search.f_measure) << '\n'
      << "grid_points=" << search.grid.size() << '\n';
}

void PrintReport(const McsReport &report, std::ostream &out) {
  out << "metric      value\n"
      << "precision   " << Fixed(report.precision()) << '\n'
      << "recall      " << Fixed(report.recall()) << '\n'
      << "f_measure   " << Fixed(report.f_measure()) << '\n'
      << "coverage    " << report.attempted << '/' << report.total << '\n';
  for (const std::string &id : report.excluded) {
    out << "# excluded\t" << id << '\n';
  }
  out << "attempted=" << report.attempted << '\n'
      << "correct=" << report.correct << '\n'
      << "total=" << report.total << '\n'
      << "precision=" << FormatDouble(report.precision()) << '\n'
      << "recall=" << FormatDouble(report.recall()) << '\n'
      << "f_measure=" << FormatDouble(report.f_measure()) << '\n';
}

}  // namespace jointsense
