// Copyright 2026 The anyonlab Authors
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

#ifndef ANYONLAB_BENCH_H
#define ANYONLAB_BENCH_H

#include <cstdint>
#include <string>
#include <vector>

namespace anyonlab {

struct BenchRow {
    int r = 0, c = 0, d = 2, samples = 0;
    double mean_ms = 0, stddev_ms = 0;
};

struct BenchConfig {
    std::vector<int> rows;
    int cols = 1024;
    int d = 8;
    int samples = 3;
    std::uint64_t seed = 1;
    double density = 0.95;  // near-dense: a few zeros sprinkled in
    bool relations = true;
};

// One row per r (rows with samples == 0 are omitted).
std::vector<BenchRow> bench_mge(const BenchConfig &cfg);

std::string bench_csv(const std::vector<BenchRow> &rows);

struct SlopeFit {
    double slope = 0, intercept = 0;
    int points = 0;
};

// Least squares of log(mean_ms) against log(r) over rows with r < c
// (below = true) or r > c (below = false).  points < 2 means no fit.
SlopeFit fit_slope(const std::vector<BenchRow> &rows, bool below);

}  // namespace anyonlab

#endif
