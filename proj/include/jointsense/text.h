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

#ifndef JOINTSENSE_TEXT_H_
#define JOINTSENSE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace jointsense {

// Splits on runs of ASCII whitespace; empty fields are dropped.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string> Split(std::string_view text, char sep);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// ASCII lowercase. Bytes >= 0x80 are left untouched so UTF-8 survives.
std::string ToLower(std::string_view text);

// Strips a trailing '\r' left by CRLF files.
std::string_view StripCarriageReturn(std::string_view line);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatFloat(float value);
std::string FormatDouble(double value);

// Strict numeric parsing: the whole field must be consumed.
bool ParseDouble(std::string_view text, double *value);
bool ParseFloat(std::string_view text, float *value);

}  // namespace jointsense

#endif  // JOINTSENSE_TEXT_H_
