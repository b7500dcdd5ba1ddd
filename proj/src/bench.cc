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

#include "anyonlab/bench.h"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "anyonlab/matrixlab.h"

namespace anyonlab {

std::vector<BenchRow> bench_mge(const BenchConfig &cfg) {
    std::vector<BenchRow> out;
    if (cfg.samples <= 0) return out;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> val(1, cfg.d - 1);
    std::bernoulli_distribution keep(cfg.density);
    for (int r : cfg.rows) {
        std::vector<double> ms;
        for (int k = 0; k < cfg.samples; k++) {
            std::vector<std::vector<int>> m(r, std::vector<int>(cfg.cols, 0));
            for (auto &row : m)
                for (auto &x : row)
                    if (keep(rng)) x = val(rng);
            Matrix mat = Matrix::from_rows(m, cfg.d);
            auto t0 = std::chrono::steady_clock::now();
            auto res = mge(mat, cfg.d, {cfg.relations});
            auto t1 = std::chrono::steady_clock::now();
            // keep the result alive so the call is not elided
            if (res.rank() < 0) return out;
            ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        double mean = 0, var = 0;
        for (double v : ms) mean += v;
        mean /= ms.size();
        for (double v : ms) var += (v - mean) * (v - mean);
        var = ms.size() > 1 ? var / (ms.size() - 1) : 0;
        out.push_back({r, cfg.cols, cfg.d, cfg.samples, mean, std::sqrt(var)});
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::ostringstream os;
    os << "r,c,d,samples,mean_ms,stddev_ms\n";
    for (auto &b : rows) os << b.r << "," << b.c << "," << b.d << "," << b.samples << "," << b.mean_ms << "," << b.stddev_ms << "\n";
    return os.str();
}

SlopeFit fit_slope(const std::vector<BenchRow> &rows, bool below) {
    std::vector<double> xs, ys;
    for (auto &b : rows) {
        if (below ? b.r >= b.c : b.r <= b.c) continue;
        if (b.mean_ms <= 0) continue;
        xs.push_back(std::log((double)b.r));
        ys.push_back(std::log(b.mean_ms));
    }
    SlopeFit f;
    f.points = (int)xs.size();
    if (f.points < 2) return f;
    double mx = 0, my = 0;
    for (int i = 0; i < f.points; i++) mx += xs[i], my += ys[i];
    mx /= f.points;
    my /= f.points;
    double sxy = 0, sxx = 0;
    for (int i = 0; i < f.points; i++) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
    f.slope = sxx > 0 ? sxy / sxx : 0;
    f.intercept = my - f.slope * mx;
    return f;
}

}  // namespace anyonlab
