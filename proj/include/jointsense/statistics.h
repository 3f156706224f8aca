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

#ifndef JOINTSENSE_STATISTICS_H_
#define JOINTSENSE_STATISTICS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace jointsense {

// Product-moment correlation. Throws std::invalid_argument on mismatched or
// too-short inputs and DataError when either side is constant.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson over ranks; tied values share their average rank.
double Spearman(std::span<const double> xs, std::span<const double> ys);

// 1-based ranks with ties averaged.
std::vector<double> AverageRanks(std::span<const double> values);

// Harmonic mean of precision and recall; 0 when both are 0.
double FMeasure(double precision, double recall);

}  // namespace jointsense

#endif  // JOINTSENSE_STATISTICS_H_
