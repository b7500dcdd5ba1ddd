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

#ifndef ANYONLAB_MATRIXLAB_H
#define ANYONLAB_MATRIXLAB_H

#include <cstdint>
#include <optional>
#include <vector>

#include "anyonlab/symplectic.h"

namespace anyonlab {

using Entry = std::uint16_t;

// Dense row-major matrix over Z_d.
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols, int d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int d() const { return d_; }
    Entry *row(int i) { return data_.data() + (size_t)i * cols_; }
    const Entry *row(int i) const { return data_.data() + (size_t)i * cols_; }
    int at(int i, int j) const { return row(i)[j]; }
    void set(int i, int j, long long v) { row(i)[j] = (Entry)mod(v, d_); }
    void add_row(const std::vector<int> &v);
    std::vector<int> row_vec(int i) const { return {row(i), row(i) + cols_}; }
    bool row_is_zero(int i) const;
    static Matrix from_rows(const std::vector<std::vector<int>> &rows, int d);
    std::vector<std::vector<int>> to_rows() const;

   private:
    int rows_ = 0, cols_ = 0, d_ = 2;
    std::vector<Entry> data_;
};

// Cell-major: monomial x^a y^b of slot s maps to column
// ((b+ky)(2kx+1) + (a+kx)) * slots + s, so translates stay banded.
struct Layout {
    int slots = 1, kx = 0, ky = 0;

    int cells() const { return (2 * kx + 1) * (2 * ky + 1); }
    int cols() const { return slots * cells(); }
    bool inside(int a, int b) const { return a >= -kx && a <= kx && b >= -ky && b <= ky; }
    int col(int s, int a, int b) const { return ((a + kx) + (b + ky) * (2 * kx + 1)) * slots + s; }
    // inverse of col
    void decode(int c, int &s, int &a, int &b) const;
};

struct Region {
    int kx = 6, ky = 6;
    int m = 3;
    int mprime = 4;
    void validate() const;
};

std::vector<int> truncate(const Poly &f, const Layout &layout, int slot = 0);
Poly untruncate(const std::vector<int> &row, const Layout &layout, int slot, int d);
// All slots at once.
std::vector<int> truncate_vec(const PolyVec &v, const Layout &layout);
PolyVec untruncate_vec(const std::vector<int> &row, const Layout &layout, int d);
bool fits(const PolyVec &v, const Layout &layout);

// Translates x^i y^j F, j-major then i ascending, |i|<=mx, |j|<=my.
std::vector<PolyVec> td(const PolyVec &f, int mx, int my);
inline std::vector<PolyVec> td(const PolyVec &f, int m) { return td(f, m, m); }
// Stacks td(F) for every F in order and truncates into one matrix.  With
// `interleave` the rows are ordered by translate first and F second, which
// keeps the matrix banded under the cell-major layout.
Matrix td_matrix(const std::vector<PolyVec> &fs, int mx, int my, const Layout &layout, bool interleave = false);

struct Pivot {
    int row, col, value;
};

struct EchelonResult {
    Matrix echelon;
    Matrix relation;  // empty when relations were not requested
    std::vector<Pivot> pivots;
    std::vector<int> zero_rows;
    int original_rows = 0;
    int d = 2;

    int rank() const { return (int)pivots.size(); }
    // Relations among the original rows read off the zero rows (rows that are
    // identically zero mod d are skipped).
    std::vector<std::vector<int>> relations() const;
    // Given coefficients on echelon rows, express them on the original rows.
    std::vector<int> to_original(const std::vector<int> &alpha) const;
};

struct ElimOptions {
    bool relations = true;
};

bool is_prime(int p);
EchelonResult ge_field(const Matrix &m, int p, ElimOptions opt = {});
EchelonResult mge(const Matrix &m, int d, ElimOptions opt = {});
// Picks ge_field for prime d and mge otherwise.
EchelonResult eliminate(const Matrix &m, ElimOptions opt = {});

std::optional<std::vector<int>> span_check(const EchelonResult &ech, const std::vector<int> &v);

// Exact integer matrices for fusion rules.
using IntMatrix = std::vector<std::vector<long long>>;

struct SmithResult {
    IntMatrix L, A, R;  // M = L * A * R
};

SmithResult snf(const IntMatrix &m);
// Row-style Hermite normal form: U * M = H with U unimodular, H upper echelon.
struct HermiteResult {
    IntMatrix H, U;
    int rank = 0;
};
HermiteResult hnf(const IntMatrix &m);

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix &a, const IntMatrix &b);
long long int_det(const IntMatrix &m);

// Grows a row echelon basis one vector at a time.  Each stored row carries a
// tag vector (over Z_d) that callers use to remember which inserted vectors it
// was built from.
class IncrementalEchelon {
   public:
    IncrementalEchelon(int cols, int d, int tag_len);
    // Seeds from an existing echelon with zero tags.
    void seed(const EchelonResult &ech);
    // Adds v; returns false if v was already in the span.
    bool insert(std::vector<int> v, std::vector<int> tag);
    // Reduces v against the stored rows.  On success, returns the combination
    // of tags of the rows used (v = sum alpha_r row_r, tag = sum alpha_r tag_r).
    std::optional<std::vector<int>> reduce(std::vector<int> v) const;
    int tag_len() const { return tag_len_; }
    void grow_tags(int n);

   private:
    struct Row {
        std::vector<int> v, tag;
        int pivot_col, pivot;
    };
    void place(std::vector<int> v, std::vector<int> tag, int from_col);
    int cols_, d_, tag_len_;
    std::vector<Row> rows_;  // sorted by pivot_col
};

}  // namespace anyonlab

#endif
