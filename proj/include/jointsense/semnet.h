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

#ifndef JOINTSENSE_SEMNET_H_
#define JOINTSENSE_SEMNET_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jointsense {

// Opaque synset identifier: non-empty, no whitespace, no '|' and no ','.
using SynsetId = std::string;

// Dense position of a synset inside one SemanticNetwork.
using SynsetIndex = int32_t;

bool IsValidSynsetId(std::string_view id);

// Maximum number of '_'-joined tokens in a lexicon surface form.
inline constexpr int kMaxFormTokens = 3;

// Undirected, unweighted graph of synsets. Adjacency lists are kept sorted
// and symmetric; self-loops are never stored.
//
// Edge file format, one record per line:
//   synsetA<TAB>synsetB      undirected edge
//   #node<TAB>synsetId       isolated node declaration
//   # anything else          comment
class SemanticNetwork {
 public:
  SemanticNetwork() = default;

  // Parses an edge stream. Throws DataError with the line number on
  // malformed lines, weights (extra fields), invalid ids and self-loops.
  static SemanticNetwork Load(std::istream &in);

  // Writes `#node` lines for isolated synsets followed by every edge once,
  // in synset insertion order.
  void Save(std::ostream &out) const;

  // Registers a synset if absent and returns its index.
  SynsetIndex AddSynset(const SynsetId &id);

  // Adds the undirected edge a-b, registering both ends. Duplicate edges are
  // collapsed. Throws std::invalid_argument for a self-loop or invalid id.
  void AddEdge(const SynsetId &a, const SynsetId &b);

  size_t num_synsets() const { return ids_.size(); }
  size_t num_edges() const { return num_edges_; }

  bool Contains(std::string_view id) const;

  // Returns -1 when the id is unknown.
  SynsetIndex IndexOf(std::string_view id) const;

  const SynsetId &id(SynsetIndex index) const { return ids_[index]; }

  // Sorted neighbor indices.
  std::span<const SynsetIndex> Neighbors(SynsetIndex index) const {
    return adjacency_[index];
  }

  bool Adjacent(SynsetIndex a, SynsetIndex b) const;

  // |adj(s)|. Throws std::out_of_range when `id` is not in the network.
  size_t Degree(std::string_view id) const;

 private:
  void InsertEdge(SynsetIndex a, SynsetIndex b);

  std::vector<SynsetId> ids_;
  std::unordered_map<std::string, SynsetIndex> index_;
  std::vector<std::vector<SynsetIndex>> adjacency_;
  size_t num_edges_ = 0;
};

// Surface form -> ordered, duplicate-free candidate synsets (S_w).
// Forms are lowercased and hold 1-3 '_'-joined tokens.
//
// File format: surface_form<TAB>id1,id2,...  ('#' lines are comments).
// A form listed on several lines accumulates candidates in file order.
class Lexicon {
 public:
  Lexicon() = default;

  // Validates every candidate against `network`.
  static Lexicon Load(std::istream &in, const SemanticNetwork &network);

  // Same parse without network validation; used where only the form to
  // candidate mapping matters (evaluation against an embedding file).
  static Lexicon LoadUnchecked(std::istream &in);

  void Save(std::ostream &out) const;

  // Adds candidates for a form. The form is normalized first. Throws
  // std::invalid_argument for an empty or over-long form or an invalid id.
  void Add(std::string_view form, const std::vector<SynsetId> &candidates);

  // Candidates of an already-joined form, or nullptr.
  const std::vector<SynsetId> *Find(std::string_view form) const;

  // S_w for the form obtained by joining `tokens` with '_'. Returns an empty
  // list for unknown forms. Requires 1 <= tokens.size() <= kMaxFormTokens.
  std::vector<SynsetId> CandidateSynsets(
      std::span<const std::string> tokens) const;

  size_t size() const { return entries_.size(); }

  // Entries in form order.
  const std::map<std::string, std::vector<SynsetId>, std::less<>> &entries() const {
    return entries_;
  }

  // Lowercases and validates a surface form; throws std::invalid_argument.
  static std::string NormalizeForm(std::string_view form);

 private:
  static Lexicon Parse(std::istream &in, const SemanticNetwork *network);

  std::map<std::string, std::vector<SynsetId>, std::less<>> entries_;
};

}  // namespace jointsense

#endif  // JOINTSENSE_SEMNET_H_
