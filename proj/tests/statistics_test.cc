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

#include "jointsense/statistics.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "jointsense/errors.h"
#include "stats_oracle.h"

namespace jointsense {
namespace {

TEST(StatisticsTest, PerfectCorrelations) {
  std::vector<double> x = {1, 2, 3, 4, 5};
  std::vector<double> y = {3, 5, 7, 9, 11};
  std::vector<double> rev = {5, 4, 3, 2, 1};
  EXPECT_NEAR(Pearson(x, y), 1.0, 1e-12);
  EXPECT_NEAR(Spearman(x, y), 1.0, 1e-12);
  EXPECT_NEAR(Pearson(x, rev), -1.0, 1e-12);
  EXPECT_NEAR(Spearman(x, rev), -1.0, 1e-12);
}

TEST(StatisticsTest, SpearmanOnSwappedPair) {
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y = {1, 3, 2, 4};
  EXPECT_NEAR(Spearman(x, y), 0.8, 1e-12);
}

TEST(StatisticsTest, TiesGetAverageRanks) {
  std::vector<double> v = {10, 20, 20, 5, 20, 5};
  EXPECT_EQ(AverageRanks(v), testing::OracleRanks(v));
  EXPECT_EQ(AverageRanks(v), (std::vector<double>{3, 5, 5, 1.5, 5, 1.5}));
}

TEST(StatisticsTest, DegenerateInputs) {
  std::vector<double> flat = {2, 2, 2};
  std::vector<double> x = {1, 2, 3};
  std::vector<double> one = {1};
  std::vector<double> two = {1, 2};
  EXPECT_THROW(Pearson(flat, x), DataError);
  EXPECT_THROW(Spearman(x, flat), DataError);
  EXPECT_THROW(Pearson(one, one), std::invalid_argument);
  EXPECT_THROW(Pearson(x, two), std::invalid_argument);
}

TEST(StatisticsTest, AgreesWithOracle) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(30), y(30);
    for (size_t i = 0; i < x.size(); ++i) {
      x[i] = normal(rng);
      y[i] = 0.5 * x[i] + normal(rng);
    }
    EXPECT_NEAR(Pearson(x, y), testing::OraclePearson(x, y), 1e-9);
    EXPECT_NEAR(Spearman(x, y), testing::OracleSpearman(x, y), 1e-9);
    std::vector<double> cubed = x;
    for (double &v : cubed) v = v * v * v + 3;
    EXPECT_NEAR(Spearman(cubed, y), Spearman(x, y), 1e-12);
  }
}

TEST(StatisticsTest, FMeasure) {
  EXPECT_DOUBLE_EQ(FMeasure(0.5, 1.0), 2.0 / 3.0);
  EXPECT_EQ(FMeasure(0, 0), 0.0);
  EXPECT_NEAR(FMeasure(0.3, 0.9), testing::OracleF(0.3, 0.9), 1e-15);
}

}  // namespace
}  // namespace jointsense
