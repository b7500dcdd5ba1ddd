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

#ifndef ANYONLAB_ORACLE_H
#define ANYONLAB_ORACLE_H

#include <stdexcept>
#include <utility>
#include <vector>

#include "anyonlab/pipeline.h"

namespace anyonlab {

class TorusError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Finite L x L periodic instance.  Qudit (slot s, cell (a, b)) has index
// (b*L + a)*w + s; X parts live in columns [0, wL^2), Z parts after that.
struct TorusInstance {
    int L = 0;
    StabilizerCode code;
    // row (i, a, b) at index (b*L + a)*t + i; sparse (column, value) pairs
    std::vector<std::vector<std::pair<int, int>>> rows;

    int qudits() const { return code.w * L * L; }
    int row_index(int gen, int a, int b) const;
    int qudit_index(int slot, int a, int b) const;
    // Wraps a Pauli polynomial vector onto the torus as a dense 2wL^2 vector.
    std::vector<int> wrap_pauli(const PauliVector &p) const;
    // Syndrome of a dense Pauli on every stabilizer row, indexed like rows.
    std::vector<int> syndrome(const std::vector<int> &pauli) const;
};

TorusInstance instantiate_torus(const StabilizerCode &code, int L);

// Number of encoded states d^(wL^2) / |stabilizer group|.
long long torus_gsd(const TorusInstance &inst);

// Checks the length-l string built from px (along +x) and, when present, py
// (along -y): the only violated stabilizers are the two endpoint copies of
// the anyon.
bool verify_string_endpoints(const TorusInstance &inst, const StringOperator &s, int length);

// Same check for an arbitrary finite Pauli and an expected syndrome.
bool syndrome_matches(const TorusInstance &inst, const PauliVector &p, const Syndrome &expected);

// Diagonalizes over Z_d and returns gcd(pivot, d) per nonzero pivot; the row
// space has order prod(d / g).  Not normalized to a divisibility chain.
std::vector<int> smith_mod_d(std::vector<std::vector<int>> m, int d);

}  // namespace anyonlab

#endif
