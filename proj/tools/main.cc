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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "anyonlab/bench.h"
#include "anyonlab/codelib.h"
#include "anyonlab/report.h"

using namespace anyonlab;

namespace {

StabilizerCode resolve(const std::string &source, int d, int l) {
    if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        std::stringstream ss;
        ss << in.rdbuf();
        auto code = parse_code_file(ss.str());
        code.name = std::filesystem::path(source).stem().string();
        return code;
    }
    return builtin(source, d, l);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"anyon theory of translation-invariant Z_d stabilizer codes"};
    app.require_subcommand(1);

    auto *an = app.add_subcommand("analyze", "run the full pipeline on a builtin code or a code file");
    std::string source, format = "text";
    int d = 0, l = 0, oracle_L = 0;
    std::optional<int> k, kx, ky;
    AnalyzeOptions opt;
    Settings &s = opt.settings;
    an->add_option("source", source, "builtin name or path to a code file")->required();
    an->add_option("--d", d, "qudit dimension for toric/toric2/trivial");
    an->add_option("--l", l, "shift for shifted_double_semion");
    an->add_option("--k", k, "region half-width in both directions (fixes the layout)");
    an->add_option("--kx", kx, "region half-width along x (fixes the layout)");
    an->add_option("--ky", ky, "region half-width along y (fixes the layout)");
    an->add_option("--m", s.region.m, "translation window for the anyon solve")->check(CLI::PositiveNumber);
    an->add_option("--mprime", s.region.mprime, "translation window for the TO check")->check(CLI::PositiveNumber);
    an->add_option("--nmax", s.nmax, "largest string step tried")->check(CLI::PositiveNumber);
    an->add_option("--q", s.q, "starting T-junction length")->check(CLI::PositiveNumber);
    an->add_option("--oracle", oracle_L, "cross-check on an L x L torus")->check(CLI::NonNegativeNumber);
    an->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto *bm = app.add_subcommand("bench-mge", "time mge on random near-dense matrices, CSV on stdout");
    BenchConfig cfg;
    cfg.rows = {64, 128, 256, 384, 512, 768, 1024, 1536, 2048};
    bm->add_option("--rows", cfg.rows, "row counts")->delimiter(',');
    bm->add_option("--cols", cfg.cols, "column count")->check(CLI::PositiveNumber);
    bm->add_option("--d", cfg.d, "modulus")->check(CLI::Range(2, 1 << 15));
    bm->add_option("--samples", cfg.samples, "matrices per size")->check(CLI::NonNegativeNumber);
    bm->add_option("--seed", cfg.seed, "RNG seed");
    bm->add_option("--density", cfg.density, "probability an entry is drawn nonzero")->check(CLI::Range(0.0, 1.0));
    bool no_rel = false;
    bm->add_flag("--no-relations", no_rel, "skip relation tracking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (*bm) {
        for (int r : cfg.rows)
            if (r <= 0) {
                std::cerr << "row counts must be positive\n";
                return 1;
            }
        cfg.relations = !no_rel;
        auto rows = bench_mge(cfg);
        std::cout << bench_csv(rows);
        for (bool below : {true, false}) {
            auto f = fit_slope(rows, below);
            std::cerr << "# slope " << (below ? "r<c" : "r>c") << ": ";
            if (f.points < 2)
                std::cerr << "n/a (" << f.points << " points)\n";
            else
                std::cerr << f.slope << " over " << f.points << " points\n";
        }
        return 0;
    }

    if (k || kx || ky) {
        s.fixed_layout = true;
        s.region.kx = kx.value_or(k.value_or(s.region.kx));
        s.region.ky = ky.value_or(k.value_or(s.region.ky));
    }
    opt.oracle_L = oracle_L;
    AnalysisReport rep;
    try {
        s.region.validate();
        rep = analyze(resolve(source, d, l), opt);
    } catch (const RegionError &e) {
        std::cerr << "error: " << e.what() << " (try a larger --k)\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << (format == "json" ? report_to_json(rep) + "\n" : report_to_text(rep));
    return rep.exit_code();
}
