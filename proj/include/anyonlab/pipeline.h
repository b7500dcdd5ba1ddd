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

#ifndef ANYONLAB_PIPELINE_H
#define ANYONLAB_PIPELINE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyonlab/matrixlab.h"
#include "anyonlab/symplectic.h"

namespace anyonlab {

class RegionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class AnalysisError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Knobs shared by every stage.  When `fixed_layout` is false the truncation
// box of each matrix is sized from its translation window and the code range,
// and region.kx/ky are ignored; when true they are used as given and a stage
// that needs more throws RegionError.
struct Settings {
    Region region;
    bool fixed_layout = false;
    int nmax = 8;
    int q = 2;
};

enum class Direction { X, Y };

// epsilon(p) = (1 - x^n) anyon for X, (1 - y^-n) anyon for Y
struct AnyonSolution {
    Syndrome anyon;
    PauliVector p;
};

struct StringOperator {
    Syndrome anyon;
    PauliVector px;
    int nx = 0;
    PauliVector py;
    int ny = 0;
    bool check(const StabilizerCode &code) const;
};

struct TOResult {
    bool ok = true;
    std::vector<PauliVector> witnesses;  // local operators with no syndrome outside the stabilizer span
    int operators_checked = 0;
};

struct FusionResult {
    std::vector<int> gen_index;      // pool positions that entered V_gen
    IntMatrix relation;              // least-multiple relations over V_gen
    SmithResult smith;               // relation = L A R
    std::vector<int> orders;         // nontrivial diagonal of A
    IntMatrix change;                // basis_i = sum_j change[i][j] gen_j
    std::vector<Syndrome> basis;     // exact representatives
    std::vector<PauliVector> basis_p;
    int count() const { return (int)orders.size(); }
};

struct SweepResult {
    Direction dir = Direction::X;
    std::vector<int> counts;  // counts[n-1]
    int chosen_n = 0;
    std::vector<AnyonSolution> pool;
    FusionResult fusion;
};

struct AnyonClass {
    Syndrome rep;
    int order = 1;
    StringOperator string;
};

struct AnyonTheory {
    int d = 2;
    std::vector<AnyonClass> basis;
    std::vector<int> spins;
    std::vector<std::vector<int>> braiding;
    int q = 2;  // smallest q at which every spin had settled
    bool to_condition = true;
    std::vector<PauliVector> witnesses;
};

// Largest syndrome support radius over the 2w single-qudit generators.
int syndrome_range_x(const StabilizerCode &code);
int syndrome_range_y(const StabilizerCode &code);

TOResult check_to_condition(const StabilizerCode &code, const Settings &s);

std::vector<AnyonSolution> solve_anyon_equation(const StabilizerCode &code, int n, const Settings &s,
                                                Direction dir = Direction::X);

FusionResult basis_and_fusion(const StabilizerCode &code, const std::vector<AnyonSolution> &pool, const Settings &s);

SweepResult sweep_n(const StabilizerCode &code, int nmax, const Settings &s, Direction dir = Direction::X);

bool anyon_equivalent(const StabilizerCode &code, const Syndrome &v, const Syndrome &w, const Settings &s);
bool is_vacuum(const StabilizerCode &code, const Syndrome &v, const Settings &s);

// Solves epsilon(py) = (1 - y^-ny) v for every v at once; entries are empty
// where no solution exists in the region.
std::vector<std::optional<PauliVector>> y_strings(const StabilizerCode &code, const std::vector<Syndrome> &vs, int ny,
                                                  const Settings &s);
std::optional<PauliVector> y_string(const StabilizerCode &code, const Syndrome &v, int ny, const Settings &s);

int topological_spin(const StabilizerCode &code, const StringOperator &str, int q);
// Raises q from q0 until two consecutive values agree; returns (exponent, q).
std::pair<int, int> stable_spin(const StabilizerCode &code, const StringOperator &str, int q0, int qmax = 32);

StringOperator compose(const StringOperator &a, const StringOperator &b);
int braiding(const StabilizerCode &code, const StringOperator &a, const StringOperator &b, int q);
int braiding_direct(const StabilizerCode &code, const StringOperator &a, const StringOperator &b, int q);

// TO check, x sweep, fusion, y strings, spins and braiding.
AnyonTheory extract_theory(const StabilizerCode &code, const Settings &s, SweepResult *sweep_out = nullptr);

}  // namespace anyonlab

#endif
