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

#include "jointsense/annotated_corpus.h"

#include "jointsense/errors.h"
#include "jointsense/text.h"

namespace jointsense {

AnnotatedLine ParseAnnotatedLine(std::string_view line, size_t line_no) {
  AnnotatedLine tokens;
  for (const std::string &field : SplitWhitespace(StripCarriageReturn(line))) {
    AnnotatedToken token;
    size_t bar = field.find('|');
    if (bar == std::string::npos) {
      if (field.find(',') != std::string::npos) {
        throw DataError("stray ',' in bare token '" + field + "'", line_no);
      }
      token.form = field;
    } else {
      token.form = field.substr(0, bar);
      if (token.form.empty() || token.form.find(',') != std::string::npos) {
        throw DataError("malformed mention form in '" + field + "'", line_no);
      }
      std::string ids = field.substr(bar + 1);
      if (ids.find('|') != std::string::npos) {
        throw DataError("more than one '|' in '" + field + "'", line_no);
      }
      token.senses = Split(ids, ',');
      for (const SynsetId &id : token.senses) {
        if (!IsValidSynsetId(id)) {
          throw DataError("malformed sense list in '" + field + "'", line_no);
        }
      }
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::string FormatAnnotatedLine(const AnnotatedLine &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.append(tokens[i].form);
    if (!tokens[i].senses.empty()) {
      out.push_back('|');
      out.append(Join(tokens[i].senses, ","));
    }
  }
  return out;
}

}  // namespace jointsense
