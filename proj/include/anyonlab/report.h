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

#ifndef ANYONLAB_REPORT_H
#define ANYONLAB_REPORT_H

#include <string>
#include <vector>

#include "anyonlab/pipeline.h"

namespace anyonlab {

// Everything below is plain data so that a JSON round trip compares equal.
struct ReportAnyon {
    std::string syndrome;  // one polynomial per stabilizer generator
    int order = 1;
    std::string px, py;
    int nx = 0, ny = 0;
    bool operator==(const ReportAnyon &) const = default;
};

struct ReportPair {
    std::vector<int> e, m;
    bool operator==(const ReportPair &) const = default;
};

struct ReportOracle {
    int L = 0;
    long long gsd = 0;
    long long order_product = 0;
    bool gsd_match = false;
    int string_length = 0;
    std::vector<bool> strings_ok;
    std::string error;
    bool operator==(const ReportOracle &) const = default;
};

struct AnalysisReport {
    std::string code;
    int d = 2, w = 1, t = 0;
    // parameters
    int kx = 0, ky = 0, m = 0, mprime = 0, nmax = 0, q_start = 0;
    bool fixed_layout = false;
    bool valid = true;
    std::vector<std::string> validation_errors;
    bool to_condition = true;
    std::vector<std::string> witnesses;
    std::vector<int> counts_x;
    int chosen_n = 0;
    int q = 0;
    std::vector<ReportAnyon> anyons;
    std::vector<int> spins;
    std::vector<std::vector<int>> braiding;
    // lexicographically smallest table over all bases, when the group is small
    std::vector<int> canonical;
    std::vector<ReportPair> em_pairs;
    std::string em_note;
    bool has_oracle = false;
    ReportOracle oracle;
    bool operator==(const AnalysisReport &) const = default;

    int exit_code() const { return !valid ? 1 : to_condition ? 0 : 2; }
};

struct AnalyzeOptions {
    Settings settings;
    int oracle_L = 0;  // 0 skips the torus cross-check
    int string_length = 3;
};

AnalysisReport analyze(const StabilizerCode &code, const AnalyzeOptions &opt);

std::string report_to_json(const AnalysisReport &r, int indent = 2);
AnalysisReport report_from_json(const std::string &text);
std::string report_to_text(const AnalysisReport &r);

}  // namespace anyonlab

#endif
