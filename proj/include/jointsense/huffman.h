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

#ifndef JOINTSENSE_HUFFMAN_H_
#define JOINTSENSE_HUFFMAN_H_

#include <cstdint>
#include <span>
#include <vector>

namespace jointsense {

// Binary Huffman coding of a vocabulary for hierarchical softmax. Leaf i has
// a bit code and the matching path of internal nodes, both ordered from the
// root down. Internal nodes are numbered 0..V-2; the root is V-2.
class HuffmanTree {
 public:
  HuffmanTree() = default;

  // Merges the two lightest nodes first; ties go to the lower node index
  // (leaves precede internal nodes). A single leaf gets an empty code.
  static HuffmanTree Build(std::span<const int64_t> counts);

  size_t num_leaves() const { return codes_.size(); }
  size_t num_internal() const {
    return codes_.empty() ? 0 : codes_.size() - 1;
  }

  const std::vector<uint8_t> &code(size_t leaf) const { return codes_[leaf]; }
  const std::vector<int32_t> &path(size_t leaf) const { return paths_[leaf]; }

 private:
  std::vector<std::vector<uint8_t>> codes_;
  std::vector<std::vector<int32_t>> paths_;
};

}  // namespace jointsense

#endif  // JOINTSENSE_HUFFMAN_H_
