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

#include <numeric>
#include <random>

#include "anyonlab/matrixlab.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace anyonlab;

namespace {

// gcd of all k x k minors, by cofactor expansion over chosen rows/cols.
long long minor_det(const IntMatrix &m, const std::vector<int> &rs, const std::vector<int> &cs) {
    int k = (int)rs.size();
    if (k == 0) return 1;
    if (k == 1) return m[rs[0]][cs[0]];
    long long acc = 0;
    for (int j = 0; j < k; j++) {
        std::vector<int> r2(rs.begin() + 1, rs.end()), c2;
        for (int t = 0; t < k; t++)
            if (t != j) c2.push_back(cs[t]);
        long long sub = minor_det(m, r2, c2);
        acc += (j % 2 ? -1 : 1) * m[rs[0]][cs[j]] * sub;
    }
    return acc;
}

void subsets(int n, int k, int start, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if ((int)cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; i++) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<long long> elementary_divisors(const IntMatrix &m) {
    int r = (int)m.size(), c = r ? (int)m[0].size() : 0;
    std::vector<long long> dk{1}, out;
    for (int k = 1; k <= std::min(r, c); k++) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(r, k, 0, cur, rs);
        subsets(c, k, 0, cur, cs);
        long long g = 0;
        for (auto &a : rs)
            for (auto &b : cs) g = std::gcd(g, std::llabs(minor_det(m, a, b)));
        if (g == 0) break;
        out.push_back(g / dk.back());
        dk.push_back(g);
    }
    return out;
}

void expect_smith(const IntMatrix &m, const SmithResult &s) {
    EXPECT_EQ(int_mul(int_mul(s.L, s.A), s.R), m);
    EXPECT_EQ(std::llabs(int_det(s.L)), 1);
    EXPECT_EQ(std::llabs(int_det(s.R)), 1);
    int n = std::min(s.A.size(), s.A.empty() ? 0 : s.A[0].size());
    for (size_t i = 0; i < s.A.size(); i++)
        for (size_t j = 0; j < s.A[i].size(); j++)
            if (i != j) EXPECT_EQ(s.A[i][j], 0);
    for (int i = 0; i + 1 < n; i++) {
        if (s.A[i + 1][i + 1] == 0) continue;
        EXPECT_GE(s.A[i][i], 0);
        EXPECT_EQ(s.A[i + 1][i + 1] % s.A[i][i], 0);
    }
}

std::vector<long long> diagonal(const IntMatrix &a) {
    std::vector<long long> out;
    for (size_t i = 0; i < a.size() && i < a[0].size(); i++)
        if (a[i][i]) out.push_back(a[i][i]);
    return out;
}

}  // namespace

TEST(normal_forms, anyon_relation_example) {
    IntMatrix m{{6, 0, 0, 0}, {0, 6, 0, 0}, {3, 0, 2, 0}, {2, -1, 0, 2}};
    auto s = snf(m);
    expect_smith(m, s);
    EXPECT_EQ(diagonal(s.A), (std::vector<long long>{1, 1, 12, 12}));
    EXPECT_EQ(elementary_divisors(m), (std::vector<long long>{1, 1, 12, 12}));
}

TEST(normal_forms, small_cases) {
    auto id = int_identity(3);
    auto s = snf(id);
    EXPECT_EQ(s.L, id);
    EXPECT_EQ(s.A, id);
    EXPECT_EQ(s.R, id);

    IntMatrix m{{6, 0}, {0, 4}};
    auto t = snf(m);
    expect_smith(m, t);
    EXPECT_EQ(diagonal(t.A), (std::vector<long long>{2, 12}));
    EXPECT_EQ(int_det({{2, 1}, {7, 4}}), 1);
}

TEST(normal_forms, random_matches_minors) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> v(-6, 6), dim(1, 4);
    for (int k = 0; k < 200; k++) {
        int r = dim(rng), c = dim(rng);
        IntMatrix m(r, std::vector<long long>(c));
        for (auto &row : m)
            for (auto &x : row) x = v(rng);
        auto s = snf(m);
        expect_smith(m, s);
        auto d = diagonal(s.A);
        auto e = elementary_divisors(m);
        EXPECT_EQ(d, e);
    }
}

TEST(normal_forms, hermite) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int k = 0; k < 100; k++) {
        IntMatrix m(4, std::vector<long long>(5));
        for (auto &row : m)
            for (auto &x : row) x = v(rng);
        auto h = hnf(m);
        EXPECT_EQ(int_mul(h.U, m), h.H);
        EXPECT_EQ(std::llabs(int_det(h.U)), 1);
        int last = -1;
        for (int i = 0; i < h.rank; i++) {
            int c = 0;
            while (h.H[i][c] == 0) c++;
            EXPECT_GT(c, last);
            EXPECT_GT(h.H[i][c], 0);
            for (int j = 0; j < i; j++) {
                EXPECT_GE(h.H[j][c], 0);
                EXPECT_LT(h.H[j][c], h.H[i][c]);
            }
            last = c;
        }
        for (int i = h.rank; i < 4; i++)
            for (auto x : h.H[i]) EXPECT_EQ(x, 0);
    }
}

TEST(normal_forms, incremental_echelon) {
    std::mt19937 rng(12);
    for (int d : {2, 4, 6, 8, 9}) {
        for (int k = 0; k < 20; k++) {
            auto rows = oracle::random_matrix(rng, 6, 7, d, 0.5);
            IncrementalEchelon inc(7, d, 6);
            oracle::Rows kept;
            for (int i = 0; i < 6; i++) {
                std::vector<int> tag(6, 0);
                tag[i] = 1;
                auto before = kept;
                auto with = kept;
                with.emplace_back(rows[i].begin(), rows[i].end());
                bool member = oracle::same_module(before, with, 7, d);
                EXPECT_EQ(inc.insert(rows[i], tag), !member);
                kept = with;
            }
            // every combination reduces and its tag reproduces it
            std::uniform_int_distribution<int> c(0, d - 1);
            for (int t = 0; t < 10; t++) {
                std::vector<int> v(7, 0), coef(6);
                for (int i = 0; i < 6; i++) {
                    coef[i] = c(rng);
                    for (int j = 0; j < 7; j++) v[j] = mod(v[j] + (long long)coef[i] * rows[i][j], d);
                }
                auto tag = inc.reduce(v);
                ASSERT_TRUE(tag.has_value());
                std::vector<int> back(7, 0);
                for (int i = 0; i < 6; i++)
                    for (int j = 0; j < 7; j++) back[j] = mod(back[j] + (long long)(*tag)[i] * rows[i][j], d);
                EXPECT_EQ(back, v);
            }
        }
    }
}

TEST(normal_forms, incremental_seeded) {
    Matrix a = Matrix::from_rows({{4, 2, 0}, {6, 0, 3}, {0, 7, 4}}, 8);
    auto e = mge(a, 8);
    IncrementalEchelon inc(3, 8, 1);
    inc.seed(e);
    EXPECT_FALSE(inc.reduce({1, 0, 0}).has_value());
    EXPECT_TRUE(inc.insert({1, 0, 0}, {1}));
    auto t = inc.reduce({2, 0, 0});
    ASSERT_TRUE(t.has_value());
    // 2 e_0 is already spanned without the new vector; any tag is fine as long
    // as the remainder lies in the seeded span
    auto u = inc.reduce({1, 0, 0});
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(mod((*u)[0], 2), 1);
}
