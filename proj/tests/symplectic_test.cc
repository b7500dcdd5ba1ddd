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

#include "anyonlab/symplectic.h"

#include <random>

#include "anyonlab/codelib.h"
#include "gtest/gtest.h"

using namespace anyonlab;

static Poly P(const char *s, int d) { return poly_parse(s, d); }

static PauliVector vec(std::vector<const char *> parts, int d) {
    PauliVector v(parts.size(), d);
    for (size_t i = 0; i < parts.size(); i++) v[i] = P(parts[i], d);
    return v;
}

TEST(symplectic, single_qudit_dots) {
    int d = 2;
    // one qudit per cell; X_12 and Z_12 live at the same site
    auto X12 = pauli_x(1, 0, d), Z12 = pauli_z(1, 0, d);
    EXPECT_EQ(symplectic_dot(X12, Z12), Poly::constant(1, d));
    EXPECT_FALSE(commutes(X12, Z12));
    // X_58 sits one step up and right of Z_14
    auto X58 = X12.shifted(1, 1);
    EXPECT_EQ(symplectic_dot(X58, Z12), Poly::monomial(1, -1, -1, d));
    EXPECT_TRUE(commutes(X58, Z12));
    auto xs = vec({"1 + x", "y", "0", "0"}, 3);
    EXPECT_TRUE(symplectic_dot(xs, xs).is_zero());
}

TEST(symplectic, sesquilinear_and_self_commuting) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-2, 2), c(0, 3);
    auto rnd = [&] {
        PauliVector v(4, 4);
        for (int i = 0; i < 4; i++)
            for (int k = 0; k < 3; k++) v[i].add_term(c(rng), e(rng), e(rng));
        return v;
    };
    for (int k = 0; k < 50; k++) {
        auto a = rnd(), b = rnd();
        EXPECT_TRUE(commutes(a, a));
        EXPECT_EQ(symplectic_dot(a.shifted(1, -2), b), symplectic_dot(a, b).shifted(-1, 2));
        EXPECT_EQ(symplectic_dot(a * 3 + b, b), symplectic_dot(a, b) * 3 + symplectic_dot(b, b));
        EXPECT_EQ(commutator_phase(a, b), symplectic_dot(a, b).coeff(0, 0));
    }
}

TEST(symplectic, validate_codes) {
    auto toric = builtin("toric", 2);
    EXPECT_TRUE(validate_code(toric).ok);
    for (auto &name : builtin_names()) EXPECT_TRUE(validate_code(builtin(name)).ok) << name;

    StabilizerCode single{"single", 3, 1, {vec({"1 + x", "0"}, 3)}};
    EXPECT_TRUE(validate_code(single).ok);

    // S2's Z block with the sign of its second entry flipped
    auto bad = builtin("toric", 3);
    bad.gens[1][3] = P("1 - x", 3);
    auto rep = validate_code(bad);
    EXPECT_FALSE(rep.ok);
    ASSERT_EQ(rep.failures.size(), 1u);
    // hand computation: -(1 - x^-1)(1 - y) + (1 - y^-1)(1 - x)... as antipode(S1)^T Lambda S2
    Poly expect = P("1 - x", 3) * P("1 - y", 3) + P("1 - y", 3) * P("1 - x", 3);
    EXPECT_EQ(rep.failures[0].dot, expect);
}

TEST(symplectic, excitation_examples) {
    auto toric = builtin("toric", 2);
    auto ex1 = excitation_map(toric, pauli_x(2, 0, 2));
    EXPECT_TRUE(ex1[0].is_zero());
    EXPECT_EQ(ex1[1], P("-1 + y^-1", 2));
    auto toric5 = builtin("toric", 5);
    EXPECT_EQ(excitation_map(toric5, pauli_x(2, 0, 5))[1], P("-1 + y^-1", 5));

    auto triv = builtin("trivial", 2);
    auto ez = excitation_map(triv, pauli_z(2, 0, 2));
    EXPECT_EQ(ez[0], Poly::constant(1, 2));
    EXPECT_TRUE(ez[1].is_zero());

    for (auto &name : builtin_names()) {
        auto code = builtin(name);
        for (auto &g : code.gens) EXPECT_TRUE(excitation_map(code, g).is_zero()) << name;
    }
}

TEST(symplectic, double_semion_syndromes) {
    auto ds = builtin("double_semion");
    auto s = generator_syndromes(ds);
    EXPECT_EQ(s[0], vec({"y^-1 - 1", "-2y^-1 - 2", "0", "-2x"}, 4));
    EXPECT_EQ(s[2], vec({"-1 + x", "0", "2", "0"}, 4));
    EXPECT_EQ(s[1], vec({"1 - x^-1", "-2x^-1 - 2", "-2y", "0"}, 4));
    EXPECT_EQ(s[3], vec({"-1 + y", "0", "0", "2"}, 4));
    // x-direction strings
    Syndrome vs = vec({"-y - x^-1", "-2x^-1", "0", "0"}, 4), vb = vec({"-2", "0", "0", "0"}, 4);
    EXPECT_EQ(s[1] + P("y", 4) * s[2], P("1 - x", 4) * vs);
    EXPECT_EQ(s[2] * 2, P("1 - x", 4) * vb);
    // y-direction strings
    EXPECT_EQ(s[0] - P("x", 4) * s[3], P("1 - y", 4) * vec({"y^-1 + x", "2y^-1", "0", "0"}, 4));
    EXPECT_EQ(s[3] * 2, P("1 - y", 4) * vb);
}

TEST(symplectic, excitation_is_linear) {
    auto code = builtin("six_semion");
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(-2, 2), c(0, 3);
    for (int k = 0; k < 20; k++) {
        PauliVector a(8, 4), b(8, 4);
        for (int i = 0; i < 8; i++) {
            a[i].add_term(c(rng), e(rng), e(rng));
            b[i].add_term(c(rng), e(rng), e(rng));
        }
        EXPECT_EQ(excitation_map(code, a * 3 + b), excitation_map(code, a) * 3 + excitation_map(code, b));
        EXPECT_EQ(excitation_map(code, a.shifted(2, 1)), excitation_map(code, a).shifted(2, 1));
    }
}
