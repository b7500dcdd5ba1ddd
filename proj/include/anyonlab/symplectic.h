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

#ifndef ANYONLAB_SYMPLECTIC_H
#define ANYONLAB_SYMPLECTIC_H

#include <string>
#include <vector>

#include "anyonlab/laurent.h"

namespace anyonlab {

// A vector of polynomials.  Used both for Pauli operators (length 2w, X block
// first) and for syndromes (length t).
struct PolyVec {
    std::vector<Poly> e;

    PolyVec() = default;
    PolyVec(size_t n, int d) : e(n, Poly(d)) {}
    explicit PolyVec(std::vector<Poly> v) : e(std::move(v)) {}

    size_t size() const { return e.size(); }
    int d() const { return e.empty() ? 0 : e[0].d(); }
    Poly &operator[](size_t i) { return e[i]; }
    const Poly &operator[](size_t i) const { return e[i]; }
    bool is_zero() const;
    Box support() const;

    PolyVec operator+(const PolyVec &o) const;
    PolyVec operator-(const PolyVec &o) const;
    PolyVec operator*(long long c) const;
    PolyVec &operator+=(const PolyVec &o);
    PolyVec &operator-=(const PolyVec &o);
    bool operator==(const PolyVec &o) const { return e == o.e; }
    PolyVec shifted(int a, int b) const;
};

PolyVec operator*(const Poly &f, const PolyVec &v);

using PauliVector = PolyVec;
using Syndrome = PolyVec;

// Single-qudit generators X_i / Z_i (0-based slot i) for a width-w cell.
PauliVector pauli_x(int w, int i, int d);
PauliVector pauli_z(int w, int i, int d);

PolyVec antipode(const PolyVec &v);

Poly symplectic_dot(const PauliVector &v1, const PauliVector &v2);
// Constant term of symplectic_dot; the commutation phase exponent.
int commutator_phase(const PauliVector &v1, const PauliVector &v2);
bool commutes(const PauliVector &v1, const PauliVector &v2);

struct StabilizerCode {
    std::string name;
    int d = 2;
    int w = 1;
    std::vector<PauliVector> gens;

    int t() const { return (int)gens.size(); }
    // max |exponent| over all generator entries, per axis and overall
    int range_x() const;
    int range_y() const;
    int range() const { return std::max(range_x(), range_y()); }
};

struct CommutationFailure {
    int i, j;
    Poly dot;
};

struct ValidationReport {
    bool ok = true;
    std::vector<CommutationFailure> failures;
    std::vector<std::string> problems;
    std::string describe() const;
};

ValidationReport validate_code(const StabilizerCode &code);
Syndrome excitation_map(const StabilizerCode &code, const PauliVector &p);
// Syndromes of the 2w single-qudit generators, X_1..X_w then Z_1..Z_w.
std::vector<Syndrome> generator_syndromes(const StabilizerCode &code);

std::string format_vec(const PolyVec &v);

}  // namespace anyonlab

#endif
