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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anyonlab/bench.h"
#include "anyonlab/codelib.h"
#include "anyonlab/matrixlab.h"
#include "anyonlab/oracle.h"
#include "anyonlab/report.h"

namespace py = pybind11;
using namespace anyonlab;

namespace {

StabilizerCode load(const std::string &name, int d, int l, const std::string &text) {
    return text.empty() ? builtin(name, d, l) : parse_code_file(text);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "anyon theory of translation-invariant Z_d stabilizer codes";

    py::register_exception<CodeError>(mod, "CodeError", PyExc_ValueError);
    py::register_exception<RegionError>(mod, "RegionError", PyExc_RuntimeError);
    py::register_exception<AnalysisError>(mod, "AnalysisError", PyExc_RuntimeError);
    py::register_exception<TorusError>(mod, "TorusError", PyExc_ValueError);

    mod.def("builtin_names", &builtin_names);
    mod.def(
        "code_file", [](const std::string &name, int d, int l) { return format_code_file(builtin(name, d, l)); },
        py::arg("name"), py::arg("d") = 0, py::arg("l") = 0);

    mod.def(
        "analyze_json",
        [](const std::string &name, int d, int l, const std::string &text, int nmax, int q, int m, int mprime,
           int oracle_L) {
            AnalyzeOptions opt;
            opt.settings.nmax = nmax;
            opt.settings.q = q;
            opt.settings.region.m = m;
            opt.settings.region.mprime = mprime;
            opt.oracle_L = oracle_L;
            StabilizerCode code = load(name, d, l, text);
            py::gil_scoped_release nogil;
            return report_to_json(analyze(code, opt), -1);
        },
        py::arg("name") = "", py::arg("d") = 0, py::arg("l") = 0, py::arg("text") = "", py::arg("nmax") = 8,
        py::arg("q") = 2, py::arg("m") = 3, py::arg("mprime") = 4, py::arg("oracle") = 0);

    mod.def(
        "torus_gsd",
        [](const std::string &name, int L, int d, int l, const std::string &text) {
            return torus_gsd(instantiate_torus(load(name, d, l, text), L));
        },
        py::arg("name") = "", py::arg("L") = 4, py::arg("d") = 0, py::arg("l") = 0, py::arg("text") = "");

    mod.def(
        "mge",
        [](const std::vector<std::vector<int>> &rows, int d) {
            auto res = mge(Matrix::from_rows(rows, d), d);
            return py::make_tuple(res.echelon.to_rows(), res.relations(), res.rank());
        },
        py::arg("rows"), py::arg("d"), "echelon rows, relations among the input rows, rank");

    mod.def(
        "smith_diagonal",
        [](const IntMatrix &m) {
            auto s = snf(m);
            std::vector<long long> diag;
            for (size_t i = 0; i < s.A.size() && i < (s.A.empty() ? 0 : s.A[0].size()); i++) diag.push_back(s.A[i][i]);
            return diag;
        },
        py::arg("m"));

    mod.def(
        "bench_mge_csv",
        [](const std::vector<int> &rows, int cols, int d, int samples, std::uint64_t seed) {
            BenchConfig cfg;
            cfg.rows = rows;
            cfg.cols = cols;
            cfg.d = d;
            cfg.samples = samples;
            cfg.seed = seed;
            py::gil_scoped_release nogil;
            return bench_csv(bench_mge(cfg));
        },
        py::arg("rows"), py::arg("cols"), py::arg("d") = 8, py::arg("samples") = 1, py::arg("seed") = 1);
}
