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

#include "jointsense/embeddings.h"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "jointsense/errors.h"
#include "jointsense/text.h"

namespace jointsense {

std::string SenseLabel(std::string_view synset) {
  std::string label(kSensePrefix);
  label.append(synset);
  return label;
}

bool IsSenseLabel(std::string_view label) {
  return label.substr(0, kSensePrefix.size()) == kSensePrefix;
}

Embeddings ExportEmbeddings(const ModelState &state, const Vocabulary &vocab) {
  Embeddings out;
  out.dim = static_cast<int>(state.word_input.cols());
  auto append = [&](const Matrix &m, const std::vector<VocabEntry> &entries,
                    bool senses) {
    for (size_t i = 0; i < entries.size(); ++i) {
      out.labels.push_back(senses ? SenseLabel(entries[i].label)
                                  : entries[i].label);
      for (double v : m.row(i)) out.values.push_back(static_cast<float>(v));
    }
  };
  append(state.word_input, vocab.words(), false);
  append(state.sense_input, vocab.senses(), true);
  return out;
}

void WriteEmbeddings(const Embeddings &embeddings, std::ostream &out) {
  out << embeddings.labels.size() << ' ' << embeddings.dim << '\n';
  for (size_t i = 0; i < embeddings.labels.size(); ++i) {
    out << embeddings.labels[i];
    for (float v : embeddings.row(i)) out << ' ' << FormatFloat(v);
    out << '\n';
  }
}

Embeddings ReadEmbeddings(std::istream &in) {
  Embeddings result;
  std::string line;
  if (!std::getline(in, line)) throw DataError("missing header", 1);
  std::vector<std::string> header = SplitWhitespace(line);
  double count = 0;
  double dim = 0;
  if (header.size() != 2 || !ParseDouble(header[0], &count) ||
      !ParseDouble(header[1], &dim) || count < 0 || dim < 1 ||
      count != static_cast<size_t>(count) || dim != static_cast<int>(dim)) {
    throw DataError("header must be '<count> <dim>'", 1);
  }
  result.dim = static_cast<int>(dim);
  const size_t rows = static_cast<size_t>(count);
  result.labels.reserve(rows);
  result.values.reserve(rows * result.dim);
  std::unordered_set<std::string> seen;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (StripCarriageReturn(line).empty()) continue;
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() != static_cast<size_t>(result.dim) + 1) {
      throw DataError("expected label and " + std::to_string(result.dim) +
                          " values",
                      line_no);
    }
    if (!seen.insert(fields[0]).second) {
      throw DataError("duplicate label '" + fields[0] + "'", line_no);
    }
    result.labels.push_back(fields[0]);
    for (size_t j = 1; j < fields.size(); ++j) {
      float v = 0;
      if (!ParseFloat(fields[j], &v)) {
        throw DataError("bad number '" + fields[j] + "'", line_no);
      }
      result.values.push_back(v);
    }
  }
  if (in.bad()) throw DataError("read failure", line_no);
  if (result.labels.size() != rows) {
    throw DataError("header declares " + std::to_string(rows) +
                    " rows, file has " + std::to_string(result.labels.size()));
  }
  return result;
}

}  // namespace jointsense
