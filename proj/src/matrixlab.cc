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

#include "anyonlab/matrixlab.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace anyonlab {

Matrix::Matrix(int rows, int cols, int d) : rows_(rows), cols_(cols), d_(d), data_((size_t)rows * cols, 0) {
    if (d < 2 || d > 32767) throw std::invalid_argument("modulus out of supported range [2, 32767]");
}

void Matrix::add_row(const std::vector<int> &v) {
    if ((int)v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (int x : v) data_.push_back((Entry)mod(x, d_));
    rows_++;
}

bool Matrix::row_is_zero(int i) const {
    const Entry *r = row(i);
    for (int j = 0; j < cols_; j++)
        if (r[j]) return false;
    return true;
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>> &rows, int d) {
    Matrix m(0, rows.empty() ? 0 : (int)rows[0].size(), d);
    for (auto &r : rows) m.add_row(r);
    return m;
}

std::vector<std::vector<int>> Matrix::to_rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < rows_; i++) out.push_back(row_vec(i));
    return out;
}

void Layout::decode(int c, int &s, int &a, int &b) const {
    s = c % slots;
    int r = c / slots;
    a = r % (2 * kx + 1) - kx;
    b = r / (2 * kx + 1) - ky;
}

void Region::validate() const {
    if (kx < 0 || ky < 0 || m < 0 || mprime < 0) throw std::invalid_argument("region sizes must be nonnegative");
    if (!(m < mprime && mprime <= std::min(kx, ky)))
        throw std::invalid_argument("region requires m < m' <= min(kx, ky)");
}

std::vector<int> truncate(const Poly &f, const Layout &layout, int slot) {
    std::vector<int> row(layout.cols(), 0);
    for (auto &[m, c] : f.terms())
        if (layout.inside(m.a, m.b)) row[layout.col(slot, m.a, m.b)] = c;
    return row;
}

Poly untruncate(const std::vector<int> &row, const Layout &layout, int slot, int d) {
    if ((int)row.size() != layout.cols()) throw std::invalid_argument("row length does not match layout");
    Poly f(d);
    for (int b = -layout.ky; b <= layout.ky; b++)
        for (int a = -layout.kx; a <= layout.kx; a++) f.add_term(row[layout.col(slot, a, b)], a, b);
    return f;
}

std::vector<int> truncate_vec(const PolyVec &v, const Layout &layout) {
    if ((int)v.size() != layout.slots) throw std::invalid_argument("vector length does not match layout slots");
    std::vector<int> row(layout.cols(), 0);
    for (int s = 0; s < layout.slots; s++)
        for (auto &[m, c] : v[s].terms())
            if (layout.inside(m.a, m.b)) row[layout.col(s, m.a, m.b)] = c;
    return row;
}

PolyVec untruncate_vec(const std::vector<int> &row, const Layout &layout, int d) {
    PolyVec v(layout.slots, d);
    for (int s = 0; s < layout.slots; s++) v[s] = untruncate(row, layout, s, d);
    return v;
}

bool fits(const PolyVec &v, const Layout &layout) {
    Box b = v.support();
    return b.empty() || (layout.inside(b.amin, b.bmin) && layout.inside(b.amax, b.bmax));
}

std::vector<PolyVec> td(const PolyVec &f, int mx, int my) {
    std::vector<PolyVec> out;
    for (int j = -my; j <= my; j++)
        for (int i = -mx; i <= mx; i++) out.push_back(f.shifted(i, j));
    return out;
}

Matrix td_matrix(const std::vector<PolyVec> &fs, int mx, int my, const Layout &layout, bool interleave) {
    int d = fs.empty() ? 2 : fs[0].d();
    int per = (2 * mx + 1) * (2 * my + 1);
    int nf = (int)fs.size();
    Matrix out(nf * per, layout.cols(), d);
    for (int f = 0; f < nf; f++) {
        int t = 0;
        for (int j = -my; j <= my; j++)
            for (int i = -mx; i <= mx; i++, t++) {
                Entry *row = out.row(interleave ? t * nf + f : f * per + t);
                for (int s = 0; s < layout.slots; s++)
                    for (auto &[m, c] : fs[f][s].terms())
                        if (layout.inside(m.a + i, m.b + j)) row[layout.col(s, m.a + i, m.b + j)] = (Entry)c;
            }
    }
    return out;
}

std::vector<std::vector<int>> EchelonResult::relations() const {
    std::vector<std::vector<int>> out;
    if (relation.rows() == 0) return out;
    for (int z : zero_rows)
        if (!relation.row_is_zero(z)) out.push_back(relation.row_vec(z));
    return out;
}

std::vector<int> EchelonResult::to_original(const std::vector<int> &alpha) const {
    if (relation.rows() == 0) throw std::logic_error("relations were not tracked");
    std::vector<long long> acc(original_rows, 0);
    for (size_t i = 0; i < alpha.size(); i++) {
        if (!alpha[i]) continue;
        const Entry *r = relation.row((int)i);
        for (int j = 0; j < original_rows; j++) acc[j] += (long long)alpha[i] * r[j];
    }
    std::vector<int> out(original_rows);
    for (int j = 0; j < original_rows; j++) out[j] = mod(acc[j], d);
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; q++)
        if (p % q == 0) return false;
    return true;
}

namespace {

// Working rows laid out as [main | relation] with nonzero extents tracked for
// both halves so that banded inputs stay cheap.
struct Work {
    int d, cols, rel;
    bool pow2;
    Entry mask;
    std::vector<std::vector<Entry>> rows;
    std::vector<int> lo, hi, rlo, rhi;
    std::vector<Entry> tab;

    Work(const Matrix &m, int d_, bool track) : d(d_), cols(m.cols()), rel(track ? m.rows() : 0) {
        pow2 = (d & (d - 1)) == 0;
        mask = (Entry)(d - 1);
        tab.resize(d);
        for (int i = 0; i < m.rows(); i++) {
            std::vector<Entry> r(cols + rel, 0);
            const Entry *src = m.row(i);
            int l = cols, h = 0;
            for (int j = 0; j < cols; j++) {
                r[j] = (Entry)(src[j] % d);
                if (r[j]) {
                    l = std::min(l, j);
                    h = j + 1;
                }
            }
            if (track) r[cols + i] = 1;
            rows.push_back(std::move(r));
            lo.push_back(l);
            hi.push_back(h);
            rlo.push_back(track ? i : rel);
            rhi.push_back(track ? i + 1 : 0);
        }
    }

    int add_row(std::vector<Entry> r) {
        rows.push_back(std::move(r));
        lo.push_back(cols);
        hi.push_back(0);
        rlo.push_back(rel);
        rhi.push_back(0);
        int i = (int)rows.size() - 1;
        refresh(i);
        return i;
    }

    void refresh(int i) {
        auto &r = rows[i];
        int l = 0;
        while (l < cols && !r[l]) l++;
        int h = cols;
        while (h > l && !r[h - 1]) h--;
        lo[i] = l;
        hi[i] = h;
        if (l == cols) hi[i] = 0;
        int rl = cols, rh = cols + rel;
        while (rl < rh && !r[rl]) rl++;
        while (rh > rl && !r[rh - 1]) rh--;
        rlo[i] = rl - cols;
        rhi[i] = rh - cols;
        if (rl == cols + rel) rlo[i] = rel, rhi[i] = 0;
    }

    void span(Entry *dst, const Entry *src, int q, int a, int b) {
        if (a >= b) return;
        if (pow2) {
            Entry qq = (Entry)q;
            for (int k = a; k < b; k++) dst[k] = (Entry)((dst[k] - qq * src[k]) & mask);
        } else {
            for (int k = a; k < b; k++) {
                int v = dst[k] + tab[src[k]];
                dst[k] = (Entry)(v >= d ? v - d : v);
            }
        }
    }

    // row i -= q * row j  (mod d)
    void sub(int i, int j, int q) {
        q = mod(q, d);
        if (!q) return;
        if (!pow2)
            for (int s = 0; s < d; s++) tab[s] = (Entry)(((long long)(d - q) * s) % d);
        Entry *dst = rows[i].data();
        const Entry *src = rows[j].data();
        span(dst, src, q, lo[j], hi[j]);
        span(dst + cols, src + cols, q, rlo[j], rhi[j]);
        // extents only ever grow here; shrink lazily where it matters
        if (lo[j] < hi[j]) {
            lo[i] = std::min(lo[i], lo[j]);
            hi[i] = std::max(hi[i], hi[j]);
        }
        if (rlo[j] < rhi[j]) {
            rlo[i] = std::min(rlo[i], rlo[j]);
            rhi[i] = std::max(rhi[i], rhi[j]);
        }
        while (lo[i] < hi[i] && !dst[lo[i]]) lo[i]++;
        if (lo[i] >= hi[i]) lo[i] = cols, hi[i] = 0;
    }

    void scale(int i, int u) {
        auto &r = rows[i];
        for (auto &x : r) x = (Entry)(((long long)x * u) % d);
    }

    EchelonResult finish(const std::vector<int> &order, const std::vector<Pivot> &piv, int original_rows) {
        EchelonResult res;
        res.d = d;
        res.original_rows = original_rows;
        res.echelon = Matrix((int)order.size(), cols, d);
        if (rel) res.relation = Matrix((int)order.size(), rel, d);
        for (size_t k = 0; k < order.size(); k++) {
            auto &r = rows[order[k]];
            std::copy(r.begin(), r.begin() + cols, res.echelon.row((int)k));
            if (rel) std::copy(r.begin() + cols, r.end(), res.relation.row((int)k));
        }
        res.pivots = piv;
        for (size_t k = piv.size(); k < order.size(); k++) res.zero_rows.push_back((int)k);
        return res;
    }
};

int inverse_mod(int a, int p) {
    long long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return mod(t, p);
}

EchelonResult ge_gf2(const Matrix &m, bool track) {
    int r = m.rows(), c = m.cols();
    int rel = track ? r : 0;
    int wc = (c + 63) / 64, wr = (rel + 63) / 64, W = wc + wr;
    std::vector<std::vector<uint64_t>> rows(r, std::vector<uint64_t>(W, 0));
    std::vector<int> whi(r, 0);  // one past the last nonzero word
    for (int i = 0; i < r; i++) {
        const Entry *src = m.row(i);
        for (int j = 0; j < c; j++)
            if (src[j] & 1) rows[i][j >> 6] |= 1ULL << (j & 63);
        if (track) rows[i][wc + (i >> 6)] |= 1ULL << (i & 63);
        whi[i] = W;
        while (whi[i] > 0 && !rows[i][whi[i] - 1]) whi[i]--;
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Pivot> piv;
    int top = 0;
    for (int col = 0; col < c && top < r; col++) {
        int w = col >> 6;
        uint64_t bit = 1ULL << (col & 63);
        int found = -1;
        for (int k = top; k < r; k++)
            if (rows[order[k]][w] & bit) {
                found = k;
                break;
            }
        if (found < 0) continue;
        std::swap(order[top], order[found]);
        int p = order[top];
        const uint64_t *src = rows[p].data();
        int lo_w = w;
        for (int k = 0; k < r; k++) {
            int i = order[k];
            if (i == p || !(rows[i][w] & bit)) continue;
            uint64_t *dst = rows[i].data();
            for (int x = lo_w; x < whi[p]; x++) dst[x] ^= src[x];
            whi[i] = std::max(whi[i], whi[p]);
        }
        piv.push_back({top, col, 1});
        top++;
    }
    EchelonResult res;
    res.d = 2;
    res.original_rows = r;
    res.echelon = Matrix(r, c, 2);
    if (track) res.relation = Matrix(r, rel, 2);
    for (int k = 0; k < r; k++) {
        auto &row = rows[order[k]];
        Entry *e = res.echelon.row(k);
        for (int j = 0; j < c; j++) e[j] = (row[j >> 6] >> (j & 63)) & 1;
        if (track) {
            Entry *q = res.relation.row(k);
            for (int j = 0; j < rel; j++) q[j] = (row[wc + (j >> 6)] >> (j & 63)) & 1;
        }
    }
    res.pivots = piv;
    for (int k = (int)piv.size(); k < r; k++) res.zero_rows.push_back(k);
    return res;
}

}  // namespace

EchelonResult ge_field(const Matrix &m, int p, ElimOptions opt) {
    if (!is_prime(p)) throw std::invalid_argument("ge_field requires a prime modulus");
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
            if (m.at(i, j) >= p) throw std::invalid_argument("entries must be reduced mod p");
    if (p == 2) return ge_gf2(m, opt.relations);
    Work w(m, p, opt.relations);
    int r = m.rows();
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Pivot> piv;
    int top = 0;
    for (int col = 0; col < w.cols && top < r; col++) {
        int found = -1;
        for (int k = top; k < r; k++)
            if (w.rows[order[k]][col]) {
                found = k;
                break;
            }
        if (found < 0) continue;
        std::swap(order[top], order[found]);
        int pr = order[top];
        int inv = inverse_mod(w.rows[pr][col], p);
        if (inv != 1) {
            w.scale(pr, inv);
            w.refresh(pr);
        }
        for (int k = 0; k < r; k++) {
            int i = order[k];
            if (i != pr && w.rows[i][col]) w.sub(i, pr, w.rows[i][col]);
        }
        piv.push_back({top, col, 1});
        top++;
    }
    return w.finish(order, piv, r);
}

EchelonResult mge(const Matrix &m, int d, ElimOptions opt) {
    if (d < 2) throw std::invalid_argument("modulus must be at least 2");
    Work w(m, d, opt.relations);
    std::vector<int> active(m.rows());
    std::iota(active.begin(), active.end(), 0);
    std::vector<int> pivot_rows;
    std::vector<Pivot> piv;
    std::vector<Entry> virt(w.cols + w.rel, 0);
    for (int col = 0; col < w.cols && !active.empty(); col++) {
        // candidates: active rows with a nonzero entry in this column, in order,
        // then the virtual row [0..d..0] which sits at the end.
        std::vector<int> cand;
        for (int i : active)
            if (w.lo[i] <= col && w.rows[i][col]) cand.push_back(i);
        if (cand.empty()) continue;
        int vrow = -1;  // index of the virtual row once it becomes a real row
        int vval = d;
        auto value = [&](int k) { return k < (int)cand.size() ? (int)w.rows[cand[k]][col] : vval; };
        int n = (int)cand.size() + 1;
        while (true) {
            int s = -1;
            for (int k = 0; k < n; k++)
                if (value(k) && (s < 0 || value(k) < value(s))) s = k;
            bool divides = true;
            for (int k = 0; k < n; k++)
                if (value(k) % value(s)) divides = false;
            if (divides) break;
            // largest entry becomes largest mod second largest
            int big = -1, second = -1;
            for (int k = 0; k < n; k++)
                if (value(k) && (big < 0 || value(k) > value(big))) big = k;
            for (int k = 0; k < n; k++)
                if (k != big && value(k) && (second < 0 || value(k) > value(second))) second = k;
            int q = value(big) / value(second);
            if (big == n - 1) {
                if (vrow < 0) {
                    vrow = w.add_row(virt);
                }
                w.sub(vrow, cand[second], q);
                vval -= q * value(second);
            } else if (second == n - 1) {
                // the virtual row is only ever the smaller partner after it became real
                w.sub(cand[big], vrow, q);
            } else {
                w.sub(cand[big], cand[second], q);
            }
        }
        int s = -1;
        for (int k = 0; k < n; k++)
            if (value(k) && (s < 0 || value(k) < value(s))) s = k;
        int g = value(s);
        int prow;
        if (s == n - 1) {
            prow = vrow;
            active.push_back(prow);
        } else {
            prow = cand[s];
        }
        for (int k = 0; k < n - 1; k++) {
            int i = cand[k];
            if (i != prow && w.rows[i][col]) w.sub(i, prow, w.rows[i][col] / g);
        }
        if (s != n - 1) {
            // what is left of the virtual row: d e_col minus multiples of the pivot row
            if (vrow < 0) vrow = w.add_row(virt);
            int q = vval / g;
            w.sub(vrow, prow, q);
            w.rows[vrow][col] = 0;
            w.refresh(vrow);
            if (w.lo[vrow] < w.hi[vrow] || w.rlo[vrow] < w.rhi[vrow])
                active.push_back(vrow);
        }
        if (std::gcd(g, d) == 1 && g != 1) {
            w.scale(prow, inverse_mod(g, d));
            w.refresh(prow);
            g = 1;
        }
        active.erase(std::find(active.begin(), active.end(), prow));
        piv.push_back({(int)pivot_rows.size(), col, g});
        pivot_rows.push_back(prow);
    }
    std::vector<int> order = pivot_rows;
    for (int i : active) order.push_back(i);
    return w.finish(order, piv, m.rows());
}

EchelonResult eliminate(const Matrix &m, ElimOptions opt) {
    if (is_prime(m.d())) return ge_field(m, m.d(), opt);
    return mge(m, m.d(), opt);
}

std::optional<std::vector<int>> span_check(const EchelonResult &ech, const std::vector<int> &v) {
    const Matrix &e = ech.echelon;
    if ((int)v.size() != e.cols()) throw std::invalid_argument("vector length does not match echelon width");
    int d = ech.d;
    std::vector<int> cur(v.size());
    for (size_t j = 0; j < v.size(); j++) cur[j] = mod(v[j], d);
    std::vector<int> alpha(e.rows(), 0);
    for (auto &p : ech.pivots) {
        int x = cur[p.col];
        if (!x) continue;
        if (x % p.value) return std::nullopt;
        int a = x / p.value;
        alpha[p.row] = a;
        const Entry *r = e.row(p.row);
        for (int j = p.col; j < e.cols(); j++)
            if (r[j]) cur[j] = mod(cur[j] - (long long)a * r[j], d);
    }
    for (int x : cur)
        if (x) return std::nullopt;
    return alpha;
}

}  // namespace anyonlab
