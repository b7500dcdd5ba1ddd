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

#include <sstream>
#include <stdexcept>

namespace anyonlab {

bool PolyVec::is_zero() const {
    for (auto &p : e)
        if (!p.is_zero()) return false;
    return true;
}

Box PolyVec::support() const {
    Box b;
    for (auto &p : e) b.add(p.support());
    return b;
}

static void check_len(const PolyVec &a, const PolyVec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

PolyVec &PolyVec::operator+=(const PolyVec &o) {
    check_len(*this, o);
    for (size_t i = 0; i < e.size(); i++) e[i] += o.e[i];
    return *this;
}

PolyVec &PolyVec::operator-=(const PolyVec &o) {
    check_len(*this, o);
    for (size_t i = 0; i < e.size(); i++) e[i] -= o.e[i];
    return *this;
}

PolyVec PolyVec::operator+(const PolyVec &o) const {
    PolyVec r = *this;
    r += o;
    return r;
}

PolyVec PolyVec::operator-(const PolyVec &o) const {
    PolyVec r = *this;
    r -= o;
    return r;
}

PolyVec PolyVec::operator*(long long c) const {
    PolyVec r = *this;
    for (auto &p : r.e) p = p * c;
    return r;
}

PolyVec PolyVec::shifted(int a, int b) const {
    PolyVec r = *this;
    for (auto &p : r.e) p = p.shifted(a, b);
    return r;
}

PolyVec operator*(const Poly &f, const PolyVec &v) {
    PolyVec r = v;
    for (auto &p : r.e) p = f * p;
    return r;
}

PauliVector pauli_x(int w, int i, int d) {
    PauliVector v(2 * w, d);
    v[i] = Poly::constant(1, d);
    return v;
}

PauliVector pauli_z(int w, int i, int d) {
    PauliVector v(2 * w, d);
    v[w + i] = Poly::constant(1, d);
    return v;
}

PolyVec antipode(const PolyVec &v) {
    PolyVec r = v;
    for (auto &p : r.e) p = antipode(p);
    return r;
}

Poly symplectic_dot(const PauliVector &v1, const PauliVector &v2) {
    check_len(v1, v2);
    if (v1.size() % 2) throw std::invalid_argument("Pauli vector must have even length");
    size_t w = v1.size() / 2;
    Poly r(v1.d());
    for (size_t i = 0; i < w; i++) {
        if (!v1[i].is_zero() && !v2[w + i].is_zero()) r += antipode(v1[i]) * v2[w + i];
        if (!v1[w + i].is_zero() && !v2[i].is_zero()) r -= antipode(v1[w + i]) * v2[i];
    }
    return r;
}

int commutator_phase(const PauliVector &v1, const PauliVector &v2) {
    check_len(v1, v2);
    size_t w = v1.size() / 2;
    long long acc = 0;
    for (size_t i = 0; i < w; i++) {
        acc += pair_constant(v1[i], v2[w + i]);
        acc -= pair_constant(v1[w + i], v2[i]);
    }
    return mod(acc, v1.d());
}

bool commutes(const PauliVector &v1, const PauliVector &v2) { return commutator_phase(v1, v2) == 0; }

int StabilizerCode::range_x() const {
    int r = 0;
    for (auto &g : gens) r = std::max(r, g.support().radius_x());
    return r;
}

int StabilizerCode::range_y() const {
    int r = 0;
    for (auto &g : gens) r = std::max(r, g.support().radius_y());
    return r;
}

std::string ValidationReport::describe() const {
    std::ostringstream out;
    for (auto &p : problems) out << p << "\n";
    for (auto &f : failures)
        out << "S" << f.i + 1 << " and S" << f.j + 1 << " fail to commute: dot = " << poly_format(f.dot) << "\n";
    return out.str();
}

ValidationReport validate_code(const StabilizerCode &code) {
    ValidationReport rep;
    if (code.gens.empty()) rep.problems.push_back("no generators");
    for (size_t i = 0; i < code.gens.size(); i++) {
        auto &g = code.gens[i];
        if ((int)g.size() != 2 * code.w) rep.problems.push_back("S" + std::to_string(i + 1) + " has wrong width");
        else if (g.d() != code.d) rep.problems.push_back("S" + std::to_string(i + 1) + " has wrong modulus");
        else if (g.is_zero()) rep.problems.push_back("S" + std::to_string(i + 1) + " is zero");
    }
    if (!rep.problems.empty()) {
        rep.ok = false;
        return rep;
    }
    for (int i = 0; i < code.t(); i++)
        for (int j = i; j < code.t(); j++) {
            Poly dot = symplectic_dot(code.gens[i], code.gens[j]);
            if (!dot.is_zero()) rep.failures.push_back({i, j, dot});
        }
    rep.ok = rep.failures.empty();
    return rep;
}

Syndrome excitation_map(const StabilizerCode &code, const PauliVector &p) {
    if ((int)p.size() != 2 * code.w) throw std::invalid_argument("operator width does not match code");
    Syndrome s(code.t(), code.d);
    for (int i = 0; i < code.t(); i++) s[i] = symplectic_dot(code.gens[i], p);
    return s;
}

std::vector<Syndrome> generator_syndromes(const StabilizerCode &code) {
    std::vector<Syndrome> out;
    for (int i = 0; i < code.w; i++) out.push_back(excitation_map(code, pauli_x(code.w, i, code.d)));
    for (int i = 0; i < code.w; i++) out.push_back(excitation_map(code, pauli_z(code.w, i, code.d)));
    return out;
}

std::string format_vec(const PolyVec &v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ", ";
        s += poly_format(v[i]);
    }
    return s + "]";
}

}  // namespace anyonlab
