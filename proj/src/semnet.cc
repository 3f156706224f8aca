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

#include "jointsense/semnet.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "jointsense/errors.h"
#include "jointsense/text.h"

namespace jointsense {

bool IsValidSynsetId(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == '|' || c == ',' || c == ' ' || c == '\t' || c == '\n' ||
        c == '\r' || c == '\f' || c == '\v') {
      return false;
    }
  }
  return true;
}

SemanticNetwork SemanticNetwork::Load(std::istream &in) {
  SemanticNetwork net;
  std::vector<std::pair<SynsetIndex, SynsetIndex>> edges;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = StripCarriageReturn(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::vector<std::string> fields = Split(line, '\t');
      if (fields[0] != "#node") continue;
      if (fields.size() != 2 || !IsValidSynsetId(fields[1])) {
        throw DataError("malformed #node declaration", line_no);
      }
      net.AddSynset(fields[1]);
      continue;
    }
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw DataError("expected 2 tab-separated fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }
    for (const std::string &id : fields) {
      if (!IsValidSynsetId(id)) {
        throw DataError("invalid synset id '" + id + "'", line_no);
      }
    }
    if (fields[0] == fields[1]) {
      throw DataError("self-loop on synset '" + fields[0] + "'", line_no);
    }
    SynsetIndex a = net.AddSynset(fields[0]);
    SynsetIndex b = net.AddSynset(fields[1]);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (in.bad()) throw DataError("read failure after line " +
                                std::to_string(line_no));

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto &[a, b] : edges) {
    net.adjacency_[a].push_back(b);
    net.adjacency_[b].push_back(a);
  }
  for (auto &list : net.adjacency_) std::sort(list.begin(), list.end());
  net.num_edges_ = edges.size();
  return net;
}

void SemanticNetwork::Save(std::ostream &out) const {
  for (SynsetIndex s = 0; s < static_cast<SynsetIndex>(ids_.size()); ++s) {
    if (adjacency_[s].empty()) out << "#node\t" << ids_[s] << '\n';
  }
  for (SynsetIndex s = 0; s < static_cast<SynsetIndex>(ids_.size()); ++s) {
    for (SynsetIndex t : adjacency_[s]) {
      if (s < t) out << ids_[s] << '\t' << ids_[t] << '\n';
    }
  }
}

SynsetIndex SemanticNetwork::AddSynset(const SynsetId &id) {
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  if (!IsValidSynsetId(id)) {
    throw std::invalid_argument("invalid synset id '" + id + "'");
  }
  SynsetIndex index = static_cast<SynsetIndex>(ids_.size());
  ids_.push_back(id);
  index_.emplace(id, index);
  adjacency_.emplace_back();
  return index;
}

void SemanticNetwork::AddEdge(const SynsetId &a, const SynsetId &b) {
  if (a == b) throw std::invalid_argument("self-loop on synset '" + a + "'");
  InsertEdge(AddSynset(a), AddSynset(b));
}

void SemanticNetwork::InsertEdge(SynsetIndex a, SynsetIndex b) {
  auto &list_a = adjacency_[a];
  auto pos = std::lower_bound(list_a.begin(), list_a.end(), b);
  if (pos != list_a.end() && *pos == b) return;
  list_a.insert(pos, b);
  auto &list_b = adjacency_[b];
  list_b.insert(std::lower_bound(list_b.begin(), list_b.end(), a), a);
  ++num_edges_;
}

bool SemanticNetwork::Contains(std::string_view id) const {
  return IndexOf(id) >= 0;
}

SynsetIndex SemanticNetwork::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

bool SemanticNetwork::Adjacent(SynsetIndex a, SynsetIndex b) const {
  const auto &list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

size_t SemanticNetwork::Degree(std::string_view id) const {
  SynsetIndex index = IndexOf(id);
  if (index < 0) {
    throw std::out_of_range("unknown synset '" + std::string(id) + "'");
  }
  return adjacency_[index].size();
}

std::string Lexicon::NormalizeForm(std::string_view form) {
  std::string normalized = ToLower(form);
  if (normalized.empty()) throw std::invalid_argument("empty surface form");
  std::vector<std::string> tokens = Split(normalized, '_');
  if (tokens.size() > static_cast<size_t>(kMaxFormTokens)) {
    throw std::invalid_argument("surface form '" + normalized + "' has " +
                                std::to_string(tokens.size()) +
                                " tokens (max 3)");
  }
  for (const std::string &token : tokens) {
    if (!IsValidSynsetId(token)) {
      throw std::invalid_argument("malformed surface form '" + normalized +
                                  "'");
    }
  }
  return normalized;
}

void Lexicon::Add(std::string_view form,
                  const std::vector<SynsetId> &candidates) {
  std::string normalized = NormalizeForm(form);
  if (candidates.empty()) {
    throw std::invalid_argument("no candidates for '" + normalized + "'");
  }
  auto &list = entries_[normalized];
  for (const SynsetId &id : candidates) {
    if (!IsValidSynsetId(id)) {
      throw std::invalid_argument("invalid synset id '" + id + "'");
    }
    if (std::find(list.begin(), list.end(), id) == list.end()) {
      list.push_back(id);
    }
  }
}

Lexicon Lexicon::Parse(std::istream &in, const SemanticNetwork *network) {
  Lexicon lexicon;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = StripCarriageReturn(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw DataError("expected 'form<TAB>id,id,...'", line_no);
    }
    std::vector<SynsetId> candidates = Split(fields[1], ',');
    std::vector<std::string> unknown;
    for (const SynsetId &id : candidates) {
      if (!IsValidSynsetId(id)) {
        throw DataError("invalid synset id '" + id + "'", line_no);
      }
      if (network != nullptr && !network->Contains(id)) unknown.push_back(id);
    }
    if (!unknown.empty()) {
      throw DataError("unknown synset(s) not in network: " +
                          Join(unknown, ","),
                      line_no);
    }
    try {
      lexicon.Add(fields[0], candidates);
    } catch (const std::invalid_argument &e) {
      throw DataError(e.what(), line_no);
    }
  }
  if (in.bad()) throw DataError("read failure after line " +
                                std::to_string(line_no));
  return lexicon;
}

Lexicon Lexicon::Load(std::istream &in, const SemanticNetwork &network) {
  return Parse(in, &network);
}

Lexicon Lexicon::LoadUnchecked(std::istream &in) { return Parse(in, nullptr); }

void Lexicon::Save(std::ostream &out) const {
  for (const auto &[form, candidates] : entries_) {
    out << form << '\t' << Join(candidates, ",") << '\n';
  }
}

const std::vector<SynsetId> *Lexicon::Find(std::string_view form) const {
  auto it = entries_.find(form);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<SynsetId> Lexicon::CandidateSynsets(
    std::span<const std::string> tokens) const {
  if (tokens.empty() || tokens.size() > static_cast<size_t>(kMaxFormTokens)) {
    throw std::invalid_argument("candidate lookup needs 1-3 tokens");
  }
  std::string form = ToLower(tokens[0]);
  for (size_t i = 1; i < tokens.size(); ++i) {
    form.push_back('_');
    form.append(ToLower(tokens[i]));
  }
  const std::vector<SynsetId> *found = Find(form);
  return found == nullptr ? std::vector<SynsetId>{} : *found;
}

}  // namespace jointsense
