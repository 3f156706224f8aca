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
#include <queue>
#include <random>

#include <gtest/gtest.h>

namespace jointsense {
namespace {

// Code lengths from a plain priority queue over subtree depths.
std::vector<size_t> ReferenceLengths(const std::vector<int64_t> &counts) {
  using Node = std::pair<int64_t, std::vector<size_t>>;
  auto cmp = [](const Node &a, const Node &b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  for (size_t i = 0; i < counts.size(); ++i) heap.push({counts[i], {i}});
  std::vector<size_t> depth(counts.size(), 0);
  while (heap.size() > 1) {
    Node a = heap.top();
    heap.pop();
    Node b = heap.top();
    heap.pop();
    for (size_t leaf : a.second) ++depth[leaf];
    for (size_t leaf : b.second) ++depth[leaf];
    a.second.insert(a.second.end(), b.second.begin(), b.second.end());
    heap.push({a.first + b.first, a.second});
  }
  return depth;
}

double WeightedLength(const std::vector<int64_t> &counts,
                      const std::vector<size_t> &lengths) {
  double total = 0;
  for (size_t i = 0; i < counts.size(); ++i) total += counts[i] * lengths[i];
  return total;
}

TEST(HuffmanTest, ThreeLeaves) {
  std::vector<int64_t> counts = {3, 2, 1};
  HuffmanTree tree = HuffmanTree::Build(counts);
  EXPECT_EQ(tree.code(0).size(), 1u);
  EXPECT_EQ(tree.code(1).size(), 2u);
  EXPECT_EQ(tree.code(2).size(), 2u);
  EXPECT_EQ(tree.num_internal(), 2u);
}

TEST(HuffmanTest, DegenerateSizes) {
  std::vector<int64_t> one = {7};
  HuffmanTree single = HuffmanTree::Build(one);
  EXPECT_TRUE(single.code(0).empty());
  EXPECT_TRUE(single.path(0).empty());

  std::vector<int64_t> two = {1, 1};
  HuffmanTree pair = HuffmanTree::Build(two);
  EXPECT_EQ(pair.code(0).size(), 1u);
  EXPECT_EQ(pair.code(1).size(), 1u);
  EXPECT_NE(pair.code(0), pair.code(1));
  EXPECT_EQ(pair.path(0), std::vector<int32_t>{0});
}

TEST(HuffmanTest, RandomTreesArePrefixFreeAndOptimal) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 2 + rng() % 60;
    std::vector<int64_t> counts(n);
    for (int64_t &c : counts) c = 1 + rng() % 1000;
    HuffmanTree tree = HuffmanTree::Build(counts);
    std::vector<size_t> lengths(n);
    for (size_t i = 0; i < n; ++i) {
      lengths[i] = tree.code(i).size();
      ASSERT_EQ(tree.path(i).size(), lengths[i]);
      EXPECT_EQ(tree.path(i).front(), static_cast<int32_t>(n - 2));
      for (int32_t node : tree.path(i)) {
        EXPECT_GE(node, 0);
        EXPECT_LT(node, static_cast<int32_t>(n - 1));
      }
    }
    EXPECT_DOUBLE_EQ(WeightedLength(counts, lengths),
                     WeightedLength(counts, ReferenceLengths(counts)));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto &a = tree.code(i);
        const auto &b = tree.code(j);
        if (a.size() <= b.size()) {
          EXPECT_FALSE(std::equal(a.begin(), a.end(), b.begin()));
        }
      }
    }
  }
}

}  // namespace
}  // namespace jointsense
