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

#include "anyonlab/oracle.h"

#include <map>
#include <numeric>
#include <string>

namespace anyonlab {

namespace {

int wrap(int a, int L) { return mod(a, L); }

}  // namespace

int TorusInstance::row_index(int gen, int a, int b) const { return (wrap(b, L) * L + wrap(a, L)) * code.t() + gen; }

int TorusInstance::qudit_index(int slot, int a, int b) const { return (wrap(b, L) * L + wrap(a, L)) * code.w + slot; }

std::vector<int> TorusInstance::wrap_pauli(const PauliVector &p) const {
    int w = code.w, n = qudits();
    Box bx = p.support();
    if (!bx.empty() && (bx.amax - bx.amin >= L || bx.bmax - bx.bmin >= L))
        throw TorusError("operator support wraps the torus (L=" + std::to_string(L) + ")");
    std::vector<int> out(2 * n, 0);
    for (int s = 0; s < 2 * w; s++)
        for (auto &[m, c] : p[s].terms()) {
            int col = (s < w ? 0 : n) + qudit_index(s % w, m.a, m.b);
            out[col] = mod(out[col] + c, code.d);
        }
    return out;
}

std::vector<int> TorusInstance::syndrome(const std::vector<int> &pauli) const {
    // omega(A, B) = sum_j A_X[j] B_Z[j] - A_Z[j] B_X[j]
    int n = qudits(), d = code.d;
    std::vector<int> out(rows.size(), 0);
    for (size_t r = 0; r < rows.size(); r++) {
        long long acc = 0;
        for (auto &[col, v] : rows[r]) {
            if (col < n)
                acc += (long long)v * pauli[col + n];
            else
                acc -= (long long)v * pauli[col - n];
        }
        out[r] = mod(acc, d);
    }
    return out;
}

TorusInstance instantiate_torus(const StabilizerCode &code, int L) {
    if (L <= 2 * code.range())
        throw TorusError("torus size L=" + std::to_string(L) + " must exceed twice the code range " +
                         std::to_string(code.range()));
    TorusInstance inst;
    inst.L = L;
    inst.code = code;
    int t = code.t(), n = inst.qudits();
    inst.rows.assign((size_t)t * L * L, {});
    for (int b = 0; b < L; b++)
        for (int a = 0; a < L; a++)
            for (int i = 0; i < t; i++) {
                auto dense = inst.wrap_pauli(code.gens[i].shifted(a, b));
                auto &row = inst.rows[inst.row_index(i, a, b)];
                for (int c = 0; c < 2 * n; c++)
                    if (dense[c]) row.push_back({c, dense[c]});
            }
    // pairwise commutation through a column index
    std::vector<std::vector<int>> by_qudit(n);
    for (size_t r = 0; r < inst.rows.size(); r++)
        for (auto &[c, v] : inst.rows[r]) {
            auto &lst = by_qudit[c % n];
            if (lst.empty() || lst.back() != (int)r) lst.push_back((int)r);
        }
    for (size_t r = 0; r < inst.rows.size(); r++) {
        std::map<int, long long> acc;
        const auto &A = inst.rows[r];
        for (auto &[c, v] : A)
            for (int o : by_qudit[c % n]) {
                if (o <= (int)r) continue;
                for (auto &[c2, v2] : inst.rows[o]) {
                    if (c < n && c2 == c + n) acc[o] += (long long)v * v2;
                    if (c >= n && c2 == c - n) acc[o] -= (long long)v * v2;
                }
            }
        for (auto &[o, e] : acc)
            if (mod(e, code.d))
                throw TorusError("stabilizer rows " + std::to_string(r) + " and " + std::to_string(o) +
                                 " do not commute on the L=" + std::to_string(L) + " torus");
    }
    return inst;
}

std::vector<int> smith_mod_d(std::vector<std::vector<int>> m, int d) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    for (auto &r : m)
        for (auto &x : r) x = mod(x, d);
    // extended gcd on nonnegative ints: g = s*a + u*b
    auto egcd = [](long long a, long long b, long long &s, long long &u) {
        // keep the pivot when it already divides b, otherwise rows can swap forever
        if (b % a == 0) {
            s = 1, u = 0;
            return a;
        }
        long long s0 = 1, s1 = 0, u0 = 0, u1 = 1;
        while (b) {
            long long q = a / b, t = a - q * b;
            a = b, b = t;
            t = s0 - q * s1, s0 = s1, s1 = t;
            t = u0 - q * u1, u0 = u1, u1 = t;
        }
        s = s0, u = u0;
        return a;
    };
    std::vector<int> out;
    for (int t = 0; t < rows && t < cols; t++) {
        int bi = -1, bj = -1;
        for (int i = t; i < rows && bi < 0; i++)
            for (int j = t; j < cols; j++)
                if (m[i][j]) {
                    bi = i, bj = j;
                    break;
                }
        if (bi < 0) break;
        std::swap(m[t], m[bi]);
        for (auto &r : m) std::swap(r[t], r[bj]);
        // ideals of Z_d are not a chain, so clear row and column with unimodular
        // 2x2 steps until both stay clear
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = t + 1; i < rows; i++) {
                if (!m[i][t]) continue;
                long long a = m[t][t], b = m[i][t], s, u;
                long long g = egcd(a, b, s, u), ka = a / g, kb = b / g;
                for (int j = t; j < cols; j++) {
                    long long x = m[t][j], y = m[i][j];
                    m[t][j] = mod(s * x + u * y, d);
                    m[i][j] = mod(-kb * x + ka * y, d);
                }
            }
            for (int j = t + 1; j < cols; j++) {
                if (!m[t][j]) continue;
                long long a = m[t][t], b = m[t][j], s, u;
                long long g = egcd(a, b, s, u), ka = a / g, kb = b / g;
                for (int i = t; i < rows; i++) {
                    long long x = m[i][t], y = m[i][j];
                    m[i][t] = mod(s * x + u * y, d);
                    m[i][j] = mod(-kb * x + ka * y, d);
                }
                dirty = true;
            }
            if (dirty) {
                dirty = false;
                for (int i = t + 1; i < rows; i++) dirty |= m[i][t] != 0;
            }
        }
        out.push_back(std::gcd(m[t][t], d));
    }
    return out;
}

long long torus_gsd(const TorusInstance &inst) {
    int n = inst.qudits(), d = inst.code.d;
    std::vector<std::vector<int>> dense(inst.rows.size(), std::vector<int>(2 * n, 0));
    for (size_t r = 0; r < inst.rows.size(); r++)
        for (auto &[c, v] : inst.rows[r]) dense[r][c] = v;
    auto divs = smith_mod_d(dense, d);
    // log_d is not integral for composite d, so track prime exponents of the ratio
    std::map<int, long long> expo;
    auto add = [&](long long v, int sign) {
        for (int p = 2; (long long)p * p <= v; p++)
            while (v % p == 0) {
                expo[p] += sign;
                v /= p;
            }
        if (v > 1) expo[(int)v] += sign;
    };
    for (int k = 0; k < n; k++) add(d, 1);
    for (int g : divs) add(d / g, -1);
    long long out = 1;
    for (auto &[p, e] : expo) {
        if (e < 0) throw std::logic_error("stabilizer group larger than the Pauli group");
        for (long long k = 0; k < e; k++) {
            if (out > (1LL << 60) / p) throw std::overflow_error("ground state degeneracy overflows");
            out *= p;
        }
    }
    return out;
}

bool syndrome_matches(const TorusInstance &inst, const PauliVector &p, const Syndrome &expected) {
    auto syn = inst.syndrome(inst.wrap_pauli(p));
    int t = inst.code.t(), d = inst.code.d;
    std::vector<int> want(syn.size(), 0);
    for (int i = 0; i < t; i++)
        for (auto &[m, c] : expected[i].terms()) {
            int r = inst.row_index(i, m.a, m.b);
            want[r] = mod(want[r] + c, d);
        }
    return syn == want;
}

bool verify_string_endpoints(const TorusInstance &inst, const StringOperator &s, int length) {
    int d = inst.code.d, L = inst.L;
    // the two endpoint patches must not touch across the torus
    Box vb = s.anyon.support();
    int r = vb.empty() ? 0 : std::max(vb.amax - vb.amin, vb.bmax - vb.bmin);
    bool ok = true;
    if (s.nx > 0) {
        if (length * s.nx + r >= L) throw TorusError("string of length " + std::to_string(length) + " does not fit on the L=" + std::to_string(L) + " torus");
        PauliVector p(s.px.size(), d);
        for (int k = 0; k < length; k++) p += s.px.shifted(k * s.nx, 0);
        Syndrome want = s.anyon - s.anyon.shifted(length * s.nx, 0);
        ok = ok && syndrome_matches(inst, p, want);
    }
    if (s.ny > 0) {
        if (length * s.ny + r >= L) throw TorusError("string of length " + std::to_string(length) + " does not fit on the L=" + std::to_string(L) + " torus");
        PauliVector p(s.py.size(), d);
        for (int k = 0; k < length; k++) p += s.py.shifted(0, -k * s.ny);
        Syndrome want = s.anyon - s.anyon.shifted(0, -length * s.ny);
        ok = ok && syndrome_matches(inst, p, want);
    }
    return ok;
}

}  // namespace anyonlab
