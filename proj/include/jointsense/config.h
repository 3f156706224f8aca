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

#ifndef JOINTSENSE_CONFIG_H_
#define JOINTSENSE_CONFIG_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace jointsense {

// Flat `key=value` configuration. Blank lines and '#' comments are skipped;
// whitespace around keys and values is trimmed. Keys may be written with or
// without a leading "--".
class PipelineConfig {
 public:
  // Throws DataError on lines without '=', empty keys or repeated keys.
  static PipelineConfig Load(std::istream &in);

  const std::map<std::string, std::string> &values() const { return values_; }
  std::optional<std::string> Get(const std::string &key) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace jointsense

#endif  // JOINTSENSE_CONFIG_H_
