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

#ifndef JOINTSENSE_EMBEDDINGS_H_
#define JOINTSENSE_EMBEDDINGS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jointsense/model.h"
#include "jointsense/vocab.h"

namespace jointsense {

// Sense rows are labeled with this prefix so they never collide with words.
inline constexpr std::string_view kSensePrefix = "s#";

std::string SenseLabel(std::string_view synset);
bool IsSenseLabel(std::string_view label);

// Labeled vectors in the shared word/sense space.
struct Embeddings {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<float> values;  // row-major, labels.size() x dim

  std::span<const float> row(size_t i) const {
    return {values.data() + i * dim, static_cast<size_t>(dim)};
  }
};

// Input vectors of every word followed by every sense.
Embeddings ExportEmbeddings(const ModelState &state, const Vocabulary &vocab);

// Text format: header `<count> <dim>`, then `label v1 ... v_dim` per row.
// Values use the shortest decimal form that reads back to the same float.
void WriteEmbeddings(const Embeddings &embeddings, std::ostream &out);

// Throws DataError on header/row mismatches, bad numbers or duplicate labels.
Embeddings ReadEmbeddings(std::istream &in);

}  // namespace jointsense

#endif  // JOINTSENSE_EMBEDDINGS_H_
