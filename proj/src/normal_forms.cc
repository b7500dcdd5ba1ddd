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

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "anyonlab/matrixlab.h"

namespace anyonlab {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in normal form");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in normal form");
    return r;
}

// floor division so remainders are nonnegative for positive divisors
long long fdiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q--;
    return q;
}

void row_axpy(IntMatrix &m, int dst, int src, long long k) {
    for (size_t j = 0; j < m[dst].size(); j++) m[dst][j] = checked_sub(m[dst][j], checked_mul(k, m[src][j]));
}

void col_axpy(IntMatrix &m, int dst, int src, long long k) {
    for (auto &row : m) row[dst] = checked_sub(row[dst], checked_mul(k, row[src]));
}

void col_swap(IntMatrix &m, int a, int b) {
    for (auto &row : m) std::swap(row[a], row[b]);
}

}  // namespace

IntMatrix int_identity(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix &a, const IntMatrix &b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<long long>(p, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t l = 0; l < k; l++)
            if (a[i][l])
                for (size_t j = 0; j < p; j++) c[i][j] += checked_mul(a[i][l], b[l][j]);
    return c;
}

long long int_det(const IntMatrix &m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) a[i][j] = m[i][j];
    // fraction-free elimination
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (a[k][k] == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; i++)
                if (a[i][k] != 0) sw = i;
            if (sw < 0) return 0;
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return (long long)(sign * a[n - 1][n - 1]);
}

SmithResult snf(const IntMatrix &m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    IntMatrix A = m, L = int_identity(rows), R = int_identity(cols);
    // invariant: m = L * A * R
    auto swap_rows = [&](int i, int j) {
        std::swap(A[i], A[j]);
        col_swap(L, i, j);
    };
    auto swap_cols = [&](int i, int j) {
        col_swap(A, i, j);
        std::swap(R[i], R[j]);
    };
    auto add_row = [&](int dst, int src, long long k) {  // row dst -= k row src
        row_axpy(A, dst, src, k);
        col_axpy(L, src, dst, -k);
    };
    auto add_col = [&](int dst, int src, long long k) {  // col dst -= k col src
        col_axpy(A, dst, src, k);
        row_axpy(R, src, dst, -k);
    };
    for (int t = 0; t < std::min(rows, cols); t++) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < rows; i++)
                for (int j = t; j < cols; j++)
                    if (A[i][j] && (bi < 0 || std::llabs(A[i][j]) < std::llabs(A[bi][bj]))) bi = i, bj = j;
            if (bi < 0) break;
            if (bi != t) swap_rows(t, bi);
            if (bj != t) swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < rows; i++)
                if (A[i][t]) {
                    add_row(i, t, fdiv(A[i][t], A[t][t]));
                    if (A[i][t]) clean = false;
                }
            for (int j = t + 1; j < cols; j++)
                if (A[t][j]) {
                    add_col(j, t, fdiv(A[t][j], A[t][t]));
                    if (A[t][j]) clean = false;
                }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; i++)
                for (int j = t + 1; j < cols; j++)
                    if (A[i][j] % A[t][t]) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(t, bad, -1);
        }
        if (A[t][t] < 0) {
            for (auto &x : A[t]) x = -x;
            for (auto &row : L) row[t] = -row[t];
        }
    }
    return {L, A, R};
}

HermiteResult hnf(const IntMatrix &m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    HermiteResult res;
    res.H = m;
    res.U = int_identity(rows);
    auto &H = res.H;
    auto &U = res.U;
    int top = 0;
    for (int c = 0; c < cols && top < rows; c++) {
        while (true) {
            int best = -1;
            for (int i = top; i < rows; i++)
                if (H[i][c] && (best < 0 || std::llabs(H[i][c]) < std::llabs(H[best][c]))) best = i;
            if (best < 0) break;
            std::swap(H[top], H[best]);
            std::swap(U[top], U[best]);
            bool clean = true;
            for (int i = top + 1; i < rows; i++)
                if (H[i][c]) {
                    long long q = fdiv(H[i][c], H[top][c]);
                    row_axpy(H, i, top, q);
                    row_axpy(U, i, top, q);
                    if (H[i][c]) clean = false;
                }
            if (clean) break;
        }
        if (top < rows && H[top][c]) {
            if (H[top][c] < 0) {
                for (auto &x : H[top]) x = -x;
                for (auto &x : U[top]) x = -x;
            }
            for (int i = 0; i < top; i++) {
                long long q = fdiv(H[i][c], H[top][c]);
                if (q) {
                    row_axpy(H, i, top, q);
                    row_axpy(U, i, top, q);
                }
            }
            top++;
        }
    }
    res.rank = top;
    return res;
}

IncrementalEchelon::IncrementalEchelon(int cols, int d, int tag_len) : cols_(cols), d_(d), tag_len_(tag_len) {}

void IncrementalEchelon::grow_tags(int n) {
    if (n < tag_len_) throw std::invalid_argument("tags can only grow");
    tag_len_ = n;
    for (auto &r : rows_) r.tag.resize(n, 0);
}

void IncrementalEchelon::seed(const EchelonResult &ech) {
    for (auto &p : ech.pivots) place(ech.echelon.row_vec(p.row), std::vector<int>(tag_len_, 0), 0);
}

static void axpy(std::vector<int> &dst, const std::vector<int> &src, long long q, int d) {
    if (!(q %= d)) return;
    for (size_t j = 0; j < dst.size(); j++)
        if (src[j]) dst[j] = mod(dst[j] - q * src[j], d);
}

bool IncrementalEchelon::insert(std::vector<int> v, std::vector<int> tag) {
    if ((int)v.size() != cols_ || (int)tag.size() != tag_len_) throw std::invalid_argument("insert: size mismatch");
    if (reduce(v)) return false;
    place(std::move(v), std::move(tag), 0);
    return true;
}

void IncrementalEchelon::place(std::vector<int> v, std::vector<int> tag, int from_col) {
    for (auto &x : v) x = mod(x, d_);
    for (auto &x : tag) x = mod(x, d_);
    size_t k = 0;
    while (k < rows_.size() && rows_[k].pivot_col < from_col) k++;
    int c = from_col;
    while (true) {
        while (c < cols_ && !v[c]) c++;
        if (c >= cols_) return;
        while (k < rows_.size() && rows_[k].pivot_col < c) k++;
        if (k < rows_.size() && rows_[k].pivot_col == c) {
            Row &r = rows_[k];
            int g = r.pivot, x = v[c];
            if (x % g == 0) {
                axpy(v, r.v, x / g, d_);
                axpy(tag, r.tag, x / g, d_);
                continue;
            }
            // Bezout: alpha*g + beta*x = h
            long long a0 = 1, b0 = 0, a1 = 0, b1 = 1, r0 = g, r1 = x;
            while (r1) {
                long long q = r0 / r1;
                std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                std::tie(a0, a1) = std::make_pair(a1, a0 - q * a1);
                std::tie(b0, b1) = std::make_pair(b1, b0 - q * b1);
            }
            int h = (int)r0;
            std::vector<int> pv(cols_, 0), pt(tag_len_, 0), qv(cols_, 0), qt(tag_len_, 0);
            axpy(pv, r.v, -a0, d_);
            axpy(pv, v, -b0, d_);
            axpy(pt, r.tag, -a0, d_);
            axpy(pt, tag, -b0, d_);
            axpy(qv, r.v, -(x / h), d_);
            axpy(qv, v, g / h, d_);
            axpy(qt, r.tag, -(x / h), d_);
            axpy(qt, tag, g / h, d_);
            r.v = pv;
            r.tag = pt;
            r.pivot = h;
            std::vector<int> av(cols_, 0), at(tag_len_, 0);
            axpy(av, pv, -(d_ / h), d_);
            axpy(at, pt, -(d_ / h), d_);
            place(std::move(qv), std::move(qt), c + 1);
            place(std::move(av), std::move(at), c + 1);
            return;
        }
        // fresh pivot column: scale by a unit so the pivot becomes gcd(x, d)
        int x = v[c];
        int h = std::gcd(x, d_);
        if (x != h) {
            int u = 1;
            while (!(std::gcd(u, d_) == 1 && (long long)u * x % d_ == h)) u++;
            for (auto &e : v) e = (int)((long long)e * u % d_);
            for (auto &e : tag) e = (int)((long long)e * u % d_);
        }
        Row nr{v, tag, c, h};
        std::vector<int> av(cols_, 0), at(tag_len_, 0);
        axpy(av, v, -(d_ / h), d_);
        axpy(at, tag, -(d_ / h), d_);
        rows_.insert(rows_.begin() + k, std::move(nr));
        place(std::move(av), std::move(at), c + 1);
        return;
    }
}

std::optional<std::vector<int>> IncrementalEchelon::reduce(std::vector<int> v) const {
    for (auto &x : v) x = mod(x, d_);
    std::vector<int> acc(tag_len_, 0);
    for (auto &r : rows_) {
        int x = v[r.pivot_col];
        if (!x) continue;
        if (x % r.pivot) return std::nullopt;
        axpy(v, r.v, x / r.pivot, d_);
        axpy(acc, r.tag, -(x / r.pivot), d_);
    }
    for (int x : v)
        if (x) return std::nullopt;
    return acc;
}

}  // namespace anyonlab
