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

#include "jointsense/annotator.h"

#include <algorithm>
#include <exception>
#include <istream>
#include <ostream>
#include <thread>

#include "jointsense/errors.h"
#include "jointsense/text.h"

namespace jointsense {

TextUnit TokenizeUnit(std::string_view line, size_t line_no) {
  TextUnit unit = SplitWhitespace(line);
  for (std::string &token : unit) {
    if (token.find_first_of("|,") != std::string::npos) {
      throw DataError("token '" + token + "' contains a reserved '|' or ','",
                      line_no);
    }
    token = ToLower(token);
  }
  return unit;
}

// Sorted (synset, number of mentions listing it) pairs for one unit.
class Annotator::PoolIndex {
 public:
  explicit PoolIndex(std::span<const Mention> mentions) {
    for (const Mention &m : mentions) {
      for (SynsetIndex s : m.candidates) entries_.emplace_back(s, 1);
    }
    std::sort(entries_.begin(), entries_.end());
    size_t out = 0;
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (out > 0 && entries_[out - 1].first == entries_[i].first) {
        ++entries_[out - 1].second;
      } else {
        entries_[out++] = entries_[i];
      }
    }
    entries_.resize(out);
  }

  size_t size() const { return entries_.size(); }
  const std::vector<std::pair<SynsetIndex, int>> &entries() const {
    return entries_;
  }

  int MentionCount(SynsetIndex s) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), s,
        [](const std::pair<SynsetIndex, int> &e, SynsetIndex v) {
          return e.first < v;
        });
    return (it != entries_.end() && it->first == s) ? it->second : 0;
  }

 private:
  std::vector<std::pair<SynsetIndex, int>> entries_;
};

Annotator::Annotator(const SemanticNetwork &network, const Lexicon &lexicon,
                     ConnectivityParams params)
    : network_(network), params_(params) {
  if (!(params_.delta > 0)) throw UsageError("delta must be positive");
  if (params_.max_ngram < 1 || params_.max_ngram > kMaxFormTokens) {
    throw UsageError("max_ngram must be in [1, 3]");
  }
  resolved_.reserve(lexicon.size());
  for (const auto &[form, ids] : lexicon.entries()) {
    std::vector<SynsetIndex> indices;
    indices.reserve(ids.size());
    for (const SynsetId &id : ids) {
      SynsetIndex index = network.IndexOf(id);
      if (index < 0) {
        throw DataError("lexicon form '" + form + "' lists unknown synset '" +
                        id + "'");
      }
      indices.push_back(index);
    }
    resolved_.emplace(form, std::move(indices));
  }
}

const std::vector<SynsetIndex> *Annotator::Unigram(
    const std::string &token) const {
  auto it = resolved_.find(token);
  return it == resolved_.end() ? nullptr : &it->second;
}

std::vector<Mention> Annotator::ExtractMentions(const TextUnit &unit) const {
  std::vector<Mention> mentions;
  std::string form;
  for (size_t start = 0; start < unit.size(); ++start) {
    form.clear();
    for (size_t len = 1;
         len <= static_cast<size_t>(params_.max_ngram) &&
         start + len <= unit.size();
         ++len) {
      if (len > 1) form.push_back('_');
      form.append(unit[start + len - 1]);
      auto it = resolved_.find(form);
      if (it == resolved_.end()) continue;
      mentions.push_back(Mention{start, start + len, form, it->second});
    }
  }
  return mentions;
}

std::vector<SynsetIndex> Annotator::CandidatePool(
    std::span<const Mention> mentions) {
  std::vector<SynsetIndex> pool;
  for (const Mention &m : mentions) {
    pool.insert(pool.end(), m.candidates.begin(), m.candidates.end());
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

double Annotator::Threshold(size_t pool_size, size_t unit_length,
                            const ConnectivityParams &params) {
  return static_cast<double>(pool_size + unit_length) / (2.0 * params.delta);
}

namespace {

// Shared by ScoreSense and Connect so that both count identically.
template <typename Pool>
int64_t CountConnections(const SemanticNetwork &network, const Pool &pool,
                         SynsetIndex sense, const Mention &owner) {
  auto counts = [&](SynsetIndex other) {
    int listed = pool.MentionCount(other);
    if (listed == 0) return false;
    bool owned = std::find(owner.candidates.begin(), owner.candidates.end(),
                           other) != owner.candidates.end();
    return listed - (owned ? 1 : 0) > 0;
  };
  int64_t n = 0;
  std::span<const SynsetIndex> neighbors = network.Neighbors(sense);
  if (neighbors.size() <= pool.size()) {
    for (SynsetIndex other : neighbors) n += counts(other) ? 1 : 0;
  } else {
    for (const auto &[other, listed] : pool.entries()) {
      if (network.Adjacent(sense, other) && counts(other)) ++n;
    }
  }
  return n;
}

}  // namespace

ScoredSense Annotator::ScoreSense(SynsetIndex sense, size_t owner,
                                  std::span<const Mention> mentions) const {
  PoolIndex pool(mentions);
  return ScoredSense{sense,
                     CountConnections(network_, pool, sense, mentions[owner])};
}

AnnotatedUnit Annotator::Connect(const TextUnit &unit) const {
  AnnotatedUnit result;
  result.tokens = unit;
  std::vector<Mention> mentions = ExtractMentions(unit);
  PoolIndex pool(mentions);
  result.pool_size = pool.size();
  result.theta = Threshold(pool.size(), unit.size(), params_);

  std::vector<ScoredMention> scored;
  std::vector<std::vector<SynsetIndex>> selected(mentions.size());
  scored.reserve(mentions.size());
  for (size_t i = 0; i < mentions.size(); ++i) {
    const Mention &m = mentions[i];
    int64_t max_connections = 0;
    int64_t best_n = 0;
    for (SynsetIndex s : m.candidates) {
      int64_t n = CountConnections(network_, pool, s, m);
      best_n = std::max(best_n, n);
      if (n >= max_connections && static_cast<double>(n) >= result.theta) {
        if (n > max_connections) {
          selected[i].assign(1, s);
          max_connections = n;
        } else {
          selected[i].push_back(s);
        }
      }
    }
    scored.push_back(ScoredMention{m, best_n});
  }

  for (size_t kept : ResolveOverlaps(scored)) {
    result.connections.push_back(Connection{std::move(mentions[kept]),
                                            scored[kept].best_n,
                                            std::move(selected[kept])});
  }
  std::sort(result.connections.begin(), result.connections.end(),
            [](const Connection &a, const Connection &b) {
              return a.mention.start < b.mention.start;
            });
  return result;
}

std::vector<size_t> ResolveOverlaps(std::span<const ScoredMention> mentions) {
  std::vector<size_t> order(mentions.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const ScoredMention &x = mentions[a];
    const ScoredMention &y = mentions[b];
    if (x.best_n != y.best_n) return x.best_n > y.best_n;
    if (x.mention.length() != y.mention.length()) {
      return x.mention.length() > y.mention.length();
    }
    if (x.mention.start != y.mention.start) {
      return x.mention.start < y.mention.start;
    }
    return a < b;
  });

  // Picking in priority order and skipping anything that touches an earlier
  // pick is the same as repeatedly taking the best of what remains.
  size_t max_end = 0;
  for (const ScoredMention &m : mentions) {
    max_end = std::max(max_end, m.mention.end);
  }
  std::vector<bool> taken(max_end, false);
  std::vector<size_t> kept;
  for (size_t i : order) {
    const Mention &m = mentions[i].mention;
    bool free = true;
    for (size_t t = m.start; t < m.end && free; ++t) free = !taken[t];
    if (!free) continue;
    for (size_t t = m.start; t < m.end; ++t) taken[t] = true;
    kept.push_back(i);
  }
  return kept;
}

AnnotatedLine ToAnnotatedLine(const AnnotatedUnit &unit,
                              const SemanticNetwork &network) {
  AnnotatedLine line;
  size_t next = 0;
  auto emit_bare = [&](size_t until) {
    for (; next < until; ++next) line.push_back({unit.tokens[next], {}});
  };
  for (const Connection &c : unit.connections) {
    if (c.senses.empty()) continue;
    emit_bare(c.mention.start);
    AnnotatedToken token{c.mention.form, {}};
    for (SynsetIndex s : c.senses) token.senses.push_back(network.id(s));
    line.push_back(std::move(token));
    next = c.mention.end;
  }
  emit_bare(unit.tokens.size());
  return line;
}

namespace {

void AccumulateUnigrams(const TextUnit &unit, CorpusStats *stats,
                        auto &&lookup) {
  stats->tokens += unit.size();
  for (const std::string &token : unit) {
    size_t degree = lookup(token);
    if (degree > 0) {
      ++stats->content_tokens;
      stats->polysemy_sum += degree;
    }
  }
}

}  // namespace

CorpusStats ComputeCorpusStats(std::istream &corpus, const Lexicon &lexicon) {
  CorpusStats stats;
  std::string line;
  size_t line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    TextUnit unit = TokenizeUnit(line, line_no);
    if (unit.empty()) continue;
    ++stats.units;
    AccumulateUnigrams(unit, &stats, [&](const std::string &token) {
      const std::vector<SynsetId> *found = lexicon.Find(token);
      return found == nullptr ? size_t{0} : found->size();
    });
  }
  if (corpus.bad()) {
    throw DataError("read failure after line " + std::to_string(line_no));
  }
  return stats;
}

CorpusStats AnnotateCorpus(std::istream &corpus, std::ostream &out,
                           const Annotator &annotator, int threads) {
  constexpr size_t kBatchLines = 4096;
  threads = std::max(threads, 1);
  CorpusStats stats;
  std::vector<std::string> batch;
  std::vector<std::string> rendered;
  std::vector<CorpusStats> line_stats;
  std::vector<std::exception_ptr> errors;
  size_t first_line_no = 1;

  auto process = [&](size_t index) {
    try {
      TextUnit unit = TokenizeUnit(batch[index], first_line_no + index);
      rendered[index].clear();
      if (unit.empty()) return;
      CorpusStats &local = line_stats[index];
      local.units = 1;
      AccumulateUnigrams(unit, &local, [&](const std::string &token) {
        const auto *found = annotator.Unigram(token);
        return found == nullptr ? size_t{0} : found->size();
      });
      AnnotatedUnit annotated = annotator.Connect(unit);
      for (const Connection &c : annotated.connections) {
        if (c.senses.empty()) continue;
        ++local.connected_mentions;
        local.connected_senses += c.senses.size();
      }
      rendered[index] = FormatAnnotatedLine(
          ToAnnotatedLine(annotated, annotator.network()));
    } catch (...) {
      errors[index] = std::current_exception();
    }
  };

  auto flush = [&]() {
    rendered.assign(batch.size(), std::string());
    line_stats.assign(batch.size(), CorpusStats{});
    errors.assign(batch.size(), nullptr);
    if (threads == 1 || batch.size() < 2) {
      for (size_t i = 0; i < batch.size(); ++i) process(i);
    } else {
      std::vector<std::jthread> workers;
      for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w]() {
          for (size_t i = w; i < batch.size(); i += threads) process(i);
        });
      }
    }
    for (size_t i = 0; i < batch.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      const CorpusStats &local = line_stats[i];
      stats.units += local.units;
      stats.tokens += local.tokens;
      stats.content_tokens += local.content_tokens;
      stats.polysemy_sum += local.polysemy_sum;
      stats.connected_mentions += local.connected_mentions;
      stats.connected_senses += local.connected_senses;
      out << rendered[i] << '\n';
    }
    if (!out) throw DataError("write failure");
    first_line_no += batch.size();
    batch.clear();
  };

  std::string line;
  while (std::getline(corpus, line)) {
    batch.push_back(std::move(line));
    if (batch.size() == kBatchLines) flush();
  }
  if (corpus.bad()) {
    throw DataError("read failure after line " +
                    std::to_string(first_line_no + batch.size() - 1));
  }
  flush();
  return stats;
}

void WriteCorpusStats(const CorpusStats &stats, std::ostream &out) {
  out << "units=" << stats.units << '\n'
      << "tokens=" << stats.tokens << '\n'
      << "content_tokens=" << stats.content_tokens << '\n'
      << "polysemy_sum=" << stats.polysemy_sum << '\n'
      << "alpha=" << FormatDouble(stats.alpha()) << '\n'
      << "alpha_defined=" << (stats.alpha_defined() ? "true" : "false") << '\n'
      << "connected_mentions=" << stats.connected_mentions << '\n'
      << "connected_senses=" << stats.connected_senses << '\n';
}

}  // namespace jointsense
