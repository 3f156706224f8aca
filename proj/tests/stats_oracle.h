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

// Deliberately naive statistics used to cross-check the library kernels.

#ifndef JOINTSENSE_TESTS_STATS_ORACLE_H_
#define JOINTSENSE_TESTS_STATS_ORACLE_H_

#include <cmath>
#include <vector>

namespace jointsense::testing {

inline double OraclePearson(const std::vector<double> &x,
                            const std::vector<double> &y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

// Rank of v[i] counts the strictly smaller values and splits ties evenly.
inline std::vector<double> OracleRanks(const std::vector<double> &v) {
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    double less = 0, equal = 0;
    for (double w : v) {
      if (w < v[i]) ++less;
      if (w == v[i]) ++equal;
    }
    ranks[i] = less + (equal + 1) / 2;
  }
  return ranks;
}

inline double OracleSpearman(const std::vector<double> &x,
                             const std::vector<double> &y) {
  return OraclePearson(OracleRanks(x), OracleRanks(y));
}

inline double OracleF(double p, double r) {
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

}  // namespace jointsense::testing

#endif  // JOINTSENSE_TESTS_STATS_ORACLE_H_
