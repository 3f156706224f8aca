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

#include "jointsense/huffman.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace jointsense {

HuffmanTree HuffmanTree::Build(std::span<const int64_t> counts) {
  HuffmanTree tree;
  const size_t leaves = counts.size();
  tree.codes_.resize(leaves);
  tree.paths_.resize(leaves);
  if (leaves < 2) return tree;

  // Nodes 0..V-1 are leaves, V..2V-2 internal. parent/bit describe the edge
  // from each node to its parent.
  const size_t nodes = 2 * leaves - 1;
  std::vector<size_t> parent(nodes, 0);
  std::vector<uint8_t> bit(nodes, 0);
  using Item = std::pair<int64_t, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (size_t i = 0; i < leaves; ++i) heap.emplace(counts[i], i);
  for (size_t next = leaves; next < nodes; ++next) {
    Item first = heap.top();
    heap.pop();
    Item second = heap.top();
    heap.pop();
    parent[first.second] = next;
    parent[second.second] = next;
    bit[second.second] = 1;
    heap.emplace(first.first + second.first, next);
  }

  const size_t root = nodes - 1;
  for (size_t leaf = 0; leaf < leaves; ++leaf) {
    auto &code = tree.codes_[leaf];
    auto &path = tree.paths_[leaf];
    for (size_t node = leaf; node != root; node = parent[node]) {
      code.push_back(bit[node]);
      path.push_back(static_cast<int32_t>(parent[node] - leaves));
    }
    std::reverse(code.begin(), code.end());
    std::reverse(path.begin(), path.end());
  }
  return tree;
}

}  // namespace jointsense
