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

#ifndef JOINTSENSE_ANNOTATED_CORPUS_H_
#define JOINTSENSE_ANNOTATED_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "jointsense/semnet.h"

namespace jointsense {

// One position of an annotated unit: a word (possibly a '_'-joined
// multiword) plus the senses connected to it in context.
struct AnnotatedToken {
  std::string form;
  std::vector<SynsetId> senses;

  bool operator==(const AnnotatedToken &) const = default;
};

using AnnotatedLine = std::vector<AnnotatedToken>;

// Line format: tokens separated by single spaces; an annotated position is
// `form|id1,id2`, anything else is a bare word. Throws DataError (tagged
// with `line_no`) on empty forms, empty sense lists, or stray '|' / ','.
AnnotatedLine ParseAnnotatedLine(std::string_view line, size_t line_no = 0);

std::string FormatAnnotatedLine(const AnnotatedLine &tokens);

}  // namespace jointsense

#endif  // JOINTSENSE_ANNOTATED_CORPUS_H_
