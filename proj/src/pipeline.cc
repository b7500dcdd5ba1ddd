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

#include "anyonlab/pipeline.h"

#include <algorithm>
#include <set>

namespace anyonlab {

namespace {

Layout sized(const Settings &s, int slots, int needx, int needy, const char *what) {
    if (s.fixed_layout) {
        if (needx > s.region.kx || needy > s.region.ky)
            throw RegionError(std::string(what) + " needs a truncation box of at least kx=" + std::to_string(needx) +
                              ", ky=" + std::to_string(needy) + " but the region has kx=" +
                              std::to_string(s.region.kx) + ", ky=" + std::to_string(s.region.ky) +
                              "; try a larger --k");
        return {slots, s.region.kx, s.region.ky};
    }
    return {slots, needx, needy};
}

// Position of row r of an interleaved td_matrix.
struct TdIndex {
    int nf, mx, my;
    void at(int r, int &f, int &i, int &j) const {
        f = r % nf;
        int t = r / nf;
        i = t % (2 * mx + 1) - mx;
        j = t / (2 * mx + 1) - my;
    }
};

// Sum of coef[r] x^i y^j P_f over the rows of an interleaved td of the 2w
// single-qudit syndromes, restricted to the first 2w entries of each group.
PauliVector combine_paulis(const std::vector<int> &coef, const TdIndex &idx, int w, int d, int nsyn) {
    PauliVector p(2 * w, d);
    for (size_t r = 0; r < coef.size(); r++) {
        if (!coef[r]) continue;
        int f, i, j;
        idx.at((int)r, f, i, j);
        if (f >= nsyn) continue;
        int slot = f;  // P_f has a single 1 in slot f
        p[slot].add_term(coef[r], i, j);
    }
    return p;
}

Syndrome shift_sum(const PolyVec &v, int step, int from, int to, bool along_x) {
    PolyVec out(v.size(), v.d());
    for (int k = from; k <= to; k++) out += along_x ? v.shifted(k * step, 0) : v.shifted(0, k * step);
    return out;
}

long long symmetric(long long v, int d) {
    long long r = mod(v, d);
    return r > d / 2 ? r - d : r;
}

Box vec_box(const std::vector<Syndrome> &vs) {
    Box b;
    for (auto &v : vs) b.add(v.support());
    return b;
}

// Echelon of the single-qudit syndrome translates over a window large enough
// for everything in `box`.
struct LocalSpan {
    Layout layout;
    TdIndex idx;
    EchelonResult ech;
};

LocalSpan local_span(const StabilizerCode &code, const Box &box, const Settings &s, bool relations, const char *what) {
    int m = s.region.m;
    int wx = box.radius_x() + m, wy = box.radius_y() + m;
    Layout lay = sized(s, code.t(), wx + syndrome_range_x(code), wy + syndrome_range_y(code), what);
    auto syn = generator_syndromes(code);
    Matrix m1 = td_matrix(syn, wx, wy, lay, true);
    return {lay, {(int)syn.size(), wx, wy}, eliminate(m1, {relations})};
}

}  // namespace

bool StringOperator::check(const StabilizerCode &code) const {
    int d = code.d;
    bool ok = true;
    if (nx > 0) ok = ok && excitation_map(code, px) == (Poly::constant(1, d) - Poly::monomial(1, nx, 0, d)) * anyon;
    if (ny > 0) ok = ok && excitation_map(code, py) == (Poly::constant(1, d) - Poly::monomial(1, 0, -ny, d)) * anyon;
    return ok;
}

int syndrome_range_x(const StabilizerCode &code) {
    int r = 0;
    for (auto &v : generator_syndromes(code)) r = std::max(r, v.support().radius_x());
    return r;
}

int syndrome_range_y(const StabilizerCode &code) {
    int r = 0;
    for (auto &v : generator_syndromes(code)) r = std::max(r, v.support().radius_y());
    return r;
}

TOResult check_to_condition(const StabilizerCode &code, const Settings &s) {
    TOResult res;
    int m = s.region.m, mp = s.region.mprime;
    int w = code.w, d = code.d;
    auto syn = generator_syndromes(code);
    Layout l1 = sized(s, code.t(), m + syndrome_range_x(code), m + syndrome_range_y(code), "TO check (M1)");
    Matrix m1 = td_matrix(syn, m, m, l1, true);
    auto e1 = eliminate(m1);
    TdIndex idx{(int)syn.size(), m, m};

    // local operators O with epsilon(O) = 0 must lie in the stabilizer module
    int need = std::max(mp + code.range(), m);
    Layout l2 = sized(s, 2 * w, need, need, "TO check (M2)");
    Matrix m2 = td_matrix(code.gens, mp, mp, l2, true);
    auto e2 = eliminate(m2, {false});
    std::set<std::vector<int>> seen;
    for (auto &rel : e1.relations()) {
        PauliVector op = combine_paulis(rel, idx, w, d, (int)syn.size());
        if (op.is_zero()) continue;
        auto row = truncate_vec(op, l2);
        if (!seen.insert(row).second) continue;
        res.operators_checked++;
        if (!span_check(e2, row)) {
            res.ok = false;
            if (res.witnesses.size() < 16) res.witnesses.push_back(op);
        }
    }
    return res;
}

std::vector<AnyonSolution> solve_anyon_equation(const StabilizerCode &code, int n, const Settings &s, Direction dir) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    int m = s.region.m, d = code.d, t = code.t();
    bool along_x = dir == Direction::X;
    int along = (n + 1) / 2 + m;
    int mx = along_x ? along : m, my = along_x ? m : along;
    auto fs = generator_syndromes(code);
    int nsyn = (int)fs.size();
    Poly step = along_x ? Poly::constant(1, d) - Poly::monomial(1, n, 0, d)
                        : Poly::constant(1, d) - Poly::monomial(1, 0, -n, d);
    for (int j = 0; j < t; j++) {
        PolyVec u(t, d);
        u[j] = step;
        fs.push_back(u);
    }
    int rsx = syndrome_range_x(code), rsy = syndrome_range_y(code);
    int needx = mx + (along_x ? std::max(n, rsx) : rsx);
    int needy = my + (along_x ? rsy : std::max(n, rsy));
    Layout lay = sized(s, t, needx, needy, "anyon equation (M3)");
    Matrix m3 = td_matrix(fs, mx, my, lay, true);
    auto e = eliminate(m3);
    TdIndex idx{(int)fs.size(), mx, my};

    std::vector<AnyonSolution> out;
    std::set<std::vector<int>> seen;
    for (auto &rel : e.relations()) {
        Syndrome v(t, d);
        for (size_t r = 0; r < rel.size(); r++) {
            if (!rel[r]) continue;
            int f, i, j;
            idx.at((int)r, f, i, j);
            if (f >= nsyn) v[f - nsyn].add_term(-(long long)rel[r], i, j);
        }
        if (v.is_zero()) continue;
        if (!seen.insert(truncate_vec(v, lay)).second) continue;
        out.push_back({v, combine_paulis(rel, idx, code.w, d, nsyn)});
    }
    return out;
}

FusionResult basis_and_fusion(const StabilizerCode &code, const std::vector<AnyonSolution> &pool, const Settings &s) {
    FusionResult res;
    int d = code.d;
    if (pool.empty()) return res;
    std::vector<Syndrome> vs;
    for (auto &sol : pool) vs.push_back(sol.anyon);
    auto span = local_span(code, vec_box(vs), s, false, "fusion (M1)");
    IncrementalEchelon inc(span.layout.cols(), d, 0);
    inc.seed(span.ech);

    std::vector<std::vector<long long>> rel;
    for (size_t k = 0; k < pool.size(); k++) {
        auto row = truncate_vec(pool[k].anyon, span.layout);
        if (inc.reduce(row)) continue;
        int gi = (int)res.gen_index.size();
        inc.grow_tags(gi + 1);
        std::vector<long long> r(gi + 1, 0);
        for (int c = 2; c <= d; c++) {
            std::vector<int> cr(row.size());
            for (size_t j = 0; j < row.size(); j++) cr[j] = mod((long long)c * row[j], d);
            auto tag = inc.reduce(cr);
            if (!tag) continue;
            for (int j = 0; j < gi; j++) r[j] = symmetric(-(long long)(*tag)[j], d);
            r[gi] = c;
            break;
        }
        std::vector<int> tag(gi + 1, 0);
        tag[gi] = 1;
        inc.insert(row, tag);
        res.gen_index.push_back((int)k);
        rel.push_back(r);
    }
    int g = (int)res.gen_index.size();
    res.relation.assign(g, std::vector<long long>(g, 0));
    for (int i = 0; i < g; i++)
        for (size_t j = 0; j < rel[i].size(); j++) res.relation[i][j] = rel[i][j];
    res.smith = snf(res.relation);
    for (int i = 0; i < g; i++) {
        long long a = res.smith.A[i][i];
        if (std::llabs(a) == 1) continue;
        res.orders.push_back((int)std::llabs(a));
        res.change.push_back(res.smith.R[i]);
        Syndrome v(code.t(), d);
        PauliVector p(2 * code.w, d);
        for (int j = 0; j < g; j++) {
            long long c = res.smith.R[i][j];
            if (mod(c, d) == 0) continue;
            v += pool[res.gen_index[j]].anyon * c;
            p += pool[res.gen_index[j]].p * c;
        }
        res.basis.push_back(v);
        res.basis_p.push_back(p);
    }
    return res;
}

SweepResult sweep_n(const StabilizerCode &code, int nmax, const Settings &s, Direction dir) {
    SweepResult res;
    res.dir = dir;
    int best = -1;
    for (int n = 1; n <= nmax; n++) {
        auto sols = solve_anyon_equation(code, n, s, dir);
        auto fus = basis_and_fusion(code, sols, s);
        res.counts.push_back(fus.count());
        if (fus.count() > best) {
            best = fus.count();
            res.chosen_n = n;
            res.pool = std::move(sols);
            res.fusion = std::move(fus);
        }
    }
    return res;
}

bool is_vacuum(const StabilizerCode &code, const Syndrome &v, const Settings &s) {
    if (v.is_zero()) return true;
    auto span = local_span(code, v.support(), s, false, "equivalence (M1)");
    return span_check(span.ech, truncate_vec(v, span.layout)).has_value();
}

bool anyon_equivalent(const StabilizerCode &code, const Syndrome &v, const Syndrome &w, const Settings &s) {
    if (v.size() != w.size()) throw std::invalid_argument("syndrome lengths differ");
    return is_vacuum(code, v - w, s);
}

std::vector<std::optional<PauliVector>> y_strings(const StabilizerCode &code, const std::vector<Syndrome> &vs, int ny,
                                                  const Settings &s) {
    int d = code.d;
    Poly step = Poly::constant(1, d) - Poly::monomial(1, 0, -ny, d);
    std::vector<Syndrome> ws;
    for (auto &v : vs) ws.push_back(step * v);
    std::vector<std::optional<PauliVector>> out(vs.size());
    auto span = local_span(code, vec_box(ws), s, true, "y strings (M1)");
    for (size_t k = 0; k < ws.size(); k++) {
        if (ws[k].is_zero()) {
            out[k] = PauliVector(2 * code.w, d);
            continue;
        }
        auto alpha = span_check(span.ech, truncate_vec(ws[k], span.layout));
        if (!alpha) continue;
        auto coef = span.ech.to_original(*alpha);
        PauliVector p = combine_paulis(coef, span.idx, code.w, d, span.idx.nf);
        out[k] = p;
    }
    return out;
}

std::optional<PauliVector> y_string(const StabilizerCode &code, const Syndrome &v, int ny, const Settings &s) {
    return y_strings(code, {v}, ny, s)[0];
}

namespace {

struct Legs {
    PauliVector u1, u2, u3;
};

Legs legs(const StringOperator &str, int q) {
    // U1 = (x^-q nx + ... + x^-nx) px, U2 = (1 + y^-ny + ... + y^-q ny) py,
    // U3 = -(1 + x^nx + ... + x^q nx) px
    Legs l;
    l.u1 = shift_sum(str.px, -str.nx, 1, q, true);
    l.u2 = shift_sum(str.py, -str.ny, 0, q, false);
    l.u3 = shift_sum(str.px, str.nx, 0, q, true) * -1;
    return l;
}

}  // namespace

int topological_spin(const StabilizerCode &code, const StringOperator &str, int q) {
    if (str.px.is_zero() && str.py.is_zero()) return 0;
    Legs l = legs(str, q);
    // U2 as built runs into the junction while U1 and U3 run out of it.  With
    // all three legs pointing outward the sum is unchanged when a leg picks up
    // stabilizers; reversing U2 and the overall orientation leaves
    // [U1,U2] + [U2,U3] - [U3,U1].
    long long e = (long long)commutator_phase(l.u1, l.u2) + commutator_phase(l.u2, l.u3) - commutator_phase(l.u3, l.u1);
    return mod(e, code.d);
}

std::pair<int, int> stable_spin(const StabilizerCode &code, const StringOperator &str, int q0, int qmax) {
    int prev = topological_spin(code, str, q0);
    for (int q = q0 + 1; q <= qmax; q++) {
        int cur = topological_spin(code, str, q);
        if (cur == prev) return {cur, q - 1};
        prev = cur;
    }
    throw AnalysisError("topological spin did not settle by q=" + std::to_string(qmax));
}

StringOperator compose(const StringOperator &a, const StringOperator &b) {
    if (a.nx != b.nx || a.ny != b.ny) throw std::invalid_argument("strings use different steps");
    return {a.anyon + b.anyon, b.px + a.px, a.nx, b.py + a.py, a.ny};
}

int braiding(const StabilizerCode &code, const StringOperator &a, const StringOperator &b, int q) {
    long long e = (long long)topological_spin(code, compose(a, b), q) - topological_spin(code, a, q) -
                  topological_spin(code, b, q);
    return mod(e, code.d);
}

int braiding_direct(const StabilizerCode &code, const StringOperator &a, const StringOperator &b, int q) {
    if (a.nx != b.nx || a.ny != b.ny) throw std::invalid_argument("strings use different steps");
    Legs la = legs(a, q), lb = legs(b, q);
    const PauliVector *ua[3] = {&la.u1, &la.u2, &la.u3};
    const PauliVector *ub[3] = {&lb.u1, &lb.u2, &lb.u3};
    auto z = [&](int i, int j) { return (long long)commutator_phase(*ua[i - 1], *ub[j - 1]); };
    // same leg orientation as topological_spin, so the (3,1) pair enters negated
    long long e = -z(3, 2) + z(1, 2) - z(2, 1) - z(3, 1) + z(2, 3) + z(1, 3);
    return mod(e, code.d);
}

AnyonTheory extract_theory(const StabilizerCode &code, const Settings &s, SweepResult *sweep_out) {
    AnyonTheory th;
    th.d = code.d;
    auto to = check_to_condition(code, s);
    th.to_condition = to.ok;
    th.witnesses = to.witnesses;
    if (!to.ok) return th;

    SweepResult sw = sweep_n(code, s.nmax, s, Direction::X);
    auto &fus = sw.fusion;
    int nb = fus.count();
    if (nb == 0) {
        if (sweep_out) *sweep_out = std::move(sw);
        return th;
    }

    std::vector<std::optional<PauliVector>> py;
    int ny = 0;
    for (int k = 1; k <= s.nmax && !ny; k++) {
        py = y_strings(code, fus.basis, k, s);
        if (std::all_of(py.begin(), py.end(), [](auto &o) { return o.has_value(); })) ny = k;
    }
    if (!ny) throw AnalysisError("no y-direction string found up to n=" + std::to_string(s.nmax) + "; try a larger --m");

    for (int i = 0; i < nb; i++) {
        StringOperator str{fus.basis[i], fus.basis_p[i], sw.chosen_n, *py[i], ny};
        if (!str.check(code)) throw AnalysisError("string operator for basis anyon " + std::to_string(i) + " fails its defining equation");
        th.basis.push_back({fus.basis[i], fus.orders[i], str});
    }

    // settle every spin and braiding at a common q
    auto table = [&](int q) {
        std::vector<int> sp(nb);
        std::vector<std::vector<int>> br(nb, std::vector<int>(nb));
        for (int i = 0; i < nb; i++) sp[i] = topological_spin(code, th.basis[i].string, q);
        for (int i = 0; i < nb; i++)
            for (int j = 0; j < nb; j++) br[i][j] = braiding(code, th.basis[i].string, th.basis[j].string, q);
        return std::make_pair(sp, br);
    };
    int q = std::max(2, s.q);
    auto cur = table(q);
    for (;; q++) {
        if (q > 64) throw AnalysisError("spins did not settle by q=64");
        auto next = table(q + 1);
        if (next == cur) break;
        cur = std::move(next);
    }
    th.q = q;
    th.spins = cur.first;
    th.braiding = cur.second;
    if (sweep_out) *sweep_out = std::move(sw);
    return th;
}

}  // namespace anyonlab
