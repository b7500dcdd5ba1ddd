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

#include "anyonlab/report.h"

#include <algorithm>
#include <sstream>

#include "anyonlab/oracle.h"
#include "anyonlab/rearrange.h"
#include <nlohmann/json.hpp>

namespace anyonlab {

using nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportAnyon, syndrome, order, px, nx, py, ny)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportPair, e, m)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportOracle, L, gsd, order_product, gsd_match, string_length, strings_ok, error)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, code, d, w, t, kx, ky, m, mprime, nmax, q_start, fixed_layout,
                                   valid, validation_errors, to_condition, witnesses, counts_x, chosen_n, q, anyons,
                                   spins, braiding, canonical, em_pairs, em_note, has_oracle, oracle)

AnalysisReport analyze(const StabilizerCode &code, const AnalyzeOptions &opt) {
    const Settings &s = opt.settings;
    AnalysisReport r;
    r.code = code.name;
    r.d = code.d;
    r.w = code.w;
    r.t = code.t();
    r.kx = s.region.kx;
    r.ky = s.region.ky;
    r.m = s.region.m;
    r.mprime = s.region.mprime;
    r.nmax = s.nmax;
    r.q_start = s.q;
    r.fixed_layout = s.fixed_layout;

    auto val = validate_code(code);
    if (!val.ok) {
        r.valid = false;
        r.to_condition = false;
        for (auto &f : val.failures)
            r.validation_errors.push_back("generators " + std::to_string(f.i) + "," + std::to_string(f.j) +
                                          ": " + poly_format(f.dot));
        for (auto &p : val.problems) r.validation_errors.push_back(p);
        return r;
    }

    SweepResult sw;
    AnyonTheory th = extract_theory(code, s, &sw);
    r.to_condition = th.to_condition;
    for (auto &wv : th.witnesses) r.witnesses.push_back(format_vec(wv));
    if (!th.to_condition) return r;
    r.counts_x = sw.counts;
    r.chosen_n = sw.chosen_n;
    r.q = th.basis.empty() ? 0 : th.q;
    for (auto &b : th.basis)
        r.anyons.push_back({format_vec(b.rep), b.order, format_vec(b.string.px), format_vec(b.string.py),
                            b.string.nx, b.string.ny});
    r.spins = th.spins;
    r.braiding = th.braiding;

    AbelianData data = AbelianData::from(th);
    if (!th.basis.empty()) {
        try {
            r.canonical = brute_force_canonical(data);
        } catch (const RearrangeError &) {
        }
        int p = data.orders[0];
        bool uniform = std::all_of(data.orders.begin(), data.orders.end(), [&](int o) { return o == p; });
        if (!uniform || !is_prime(p)) {
            r.em_note = "skipped: basis orders are not a single prime";
        } else {
            try {
                for (auto &pr : rearrange_em_pairs(data, p)) r.em_pairs.push_back({pr.e, pr.m});
            } catch (const RearrangeError &e) {
                r.em_note = std::string("skipped: ") + e.what();
            }
        }
    }

    if (opt.oracle_L > 0) {
        r.has_oracle = true;
        auto &o = r.oracle;
        o.L = opt.oracle_L;
        o.string_length = opt.string_length;
        o.order_product = 1;
        for (auto &b : th.basis) o.order_product *= b.order;
        try {
            auto inst = instantiate_torus(code, opt.oracle_L);
            o.gsd = torus_gsd(inst);
            o.gsd_match = o.gsd == o.order_product;
            for (auto &b : th.basis) o.strings_ok.push_back(verify_string_endpoints(inst, b.string, opt.string_length));
        } catch (const TorusError &e) {
            o.error = e.what();
        }
    }
    return r;
}

std::string report_to_json(const AnalysisReport &r, int indent) { return json(r).dump(indent); }

AnalysisReport report_from_json(const std::string &text) { return json::parse(text).get<AnalysisReport>(); }

namespace {

template <class T>
std::string join(const std::vector<T> &v, const char *sep = " ") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); i++) os << (i ? sep : "") << v[i];
    return os.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport &r) {
    std::ostringstream os;
    os << "code: " << r.code << "  d=" << r.d << " w=" << r.w << " t=" << r.t << "\n";
    os << "params: kx=" << r.kx << " ky=" << r.ky << " m=" << r.m << " mprime=" << r.mprime << " nmax=" << r.nmax
       << " q=" << r.q_start << (r.fixed_layout ? " fixed" : " auto") << "\n";
    if (!r.valid) {
        os << "valid: no\n";
        for (auto &e : r.validation_errors) os << "  " << e << "\n";
        return os.str();
    }
    os << "topological order: " << (r.to_condition ? "yes" : "no") << "\n";
    for (auto &wv : r.witnesses) os << "  witness " << wv << "\n";
    if (!r.to_condition) return os.str();
    os << "counts (x, n=1..): " << join(r.counts_x) << "\n";
    os << "chosen n: " << r.chosen_n << "\n";
    os << "anyons: " << r.anyons.size() << "  (q settled at " << r.q << ")\n";
    for (size_t i = 0; i < r.anyons.size(); i++) {
        auto &a = r.anyons[i];
        os << "  v" << i + 1 << " order " << a.order << "\n";
        os << "    syndrome " << a.syndrome << "\n";
        os << "    px(n=" << a.nx << ") " << a.px << "\n";
        os << "    py(n=" << a.ny << ") " << a.py << "\n";
    }
    os << "spins (mod " << r.d << "): " << join(r.spins) << "\n";
    os << "braiding (mod " << r.d << "):\n";
    for (auto &row : r.braiding) os << "  " << join(row) << "\n";
    if (!r.canonical.empty()) os << "canonical table: " << join(r.canonical) << "\n";
    if (!r.em_pairs.empty()) {
        os << "e/m pairs:\n";
        for (auto &p : r.em_pairs) os << "  e=(" << join(p.e, ",") << ") m=(" << join(p.m, ",") << ")\n";
    }
    if (!r.em_note.empty()) os << "e/m pairs: " << r.em_note << "\n";
    if (r.has_oracle) {
        auto &o = r.oracle;
        os << "oracle L=" << o.L << ": ";
        if (!o.error.empty()) {
            os << "error: " << o.error << "\n";
        } else {
            os << "gsd " << o.gsd << " vs orders " << o.order_product << (o.gsd_match ? " ok" : " MISMATCH") << "\n";
            os << "  strings (l=" << o.string_length << "): " << join(o.strings_ok) << "\n";
        }
    }
    return os.str();
}

}  // namespace anyonlab
