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

#ifndef JOINTSENSE_ERRORS_H_
#define JOINTSENSE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace jointsense {

// Malformed or inconsistent input data. Carries the 1-based line number of
// the offending input line, or 0 when the error is not tied to a line.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &message, size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line),
        detail_(message) {}

  size_t line() const { return line_; }
  const std::string &detail() const { return detail_; }

 private:
  size_t line_;
  std::string detail_;
};

// Invalid caller-supplied parameters (bad flag values, unknown config keys).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jointsense

#endif  // JOINTSENSE_ERRORS_H_
