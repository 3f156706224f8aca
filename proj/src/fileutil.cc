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

#include "jointsense/fileutil.h"

#include <filesystem>
#include <system_error>

#include "jointsense/errors.h"

namespace jointsense {

namespace fs = std::filesystem;

AtomicFile::AtomicFile(std::string path)
    : path_(std::move(path)), temp_path_(path_ + ".tmp") {
  out_.open(temp_path_, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out_) throw DataError("cannot write '" + temp_path_ + "'");
}

AtomicFile::~AtomicFile() {
  if (committed_) return;
  out_.close();
  std::error_code ignored;
  fs::remove(temp_path_, ignored);
}

void AtomicFile::Commit() {
  out_.flush();
  if (!out_) throw DataError("write failure on '" + temp_path_ + "'");
  out_.close();
  std::error_code ec;
  fs::rename(temp_path_, path_, ec);
  if (ec) {
    throw DataError("cannot rename '" + temp_path_ + "' to '" + path_ +
                    "': " + ec.message());
  }
  committed_ = true;
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

void CheckOutputPath(const std::string &path) {
  fs::path parent = fs::path(path).parent_path();
  if (parent.empty()) return;
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) {
    throw DataError("output directory '" + parent.string() +
                    "' does not exist");
  }
}

}  // namespace jointsense
