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

#ifndef JOINTSENSE_FILEUTIL_H_
#define JOINTSENSE_FILEUTIL_H_

#include <fstream>
#include <string>

namespace jointsense {

// Writes to `<path>.tmp` and renames over `path` on Commit(). An uncommitted
// writer removes its temporary file.
class AtomicFile {
 public:
  explicit AtomicFile(std::string path);
  ~AtomicFile();

  AtomicFile(const AtomicFile &) = delete;
  AtomicFile &operator=(const AtomicFile &) = delete;

  std::ostream &stream() { return out_; }

  // Flushes, closes and renames. Throws DataError on any failure.
  void Commit();

 private:
  std::string path_;
  std::string temp_path_;
  std::ofstream out_;
  bool committed_ = false;
};

// Throws DataError naming the path when it cannot be opened.
std::ifstream OpenInput(const std::string &path);

// Throws DataError unless the parent directory of `path` exists.
void CheckOutputPath(const std::string &path);

}  // namespace jointsense

#endif  // JOINTSENSE_FILEUTIL_H_
