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

#ifndef ANYONLAB_REARRANGE_H
#define ANYONLAB_REARRANGE_H

#include <stdexcept>
#include <vector>

#include "anyonlab/pipeline.h"

namespace anyonlab {

class RearrangeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Spin and braiding data of an abelian theory on a chosen basis.  Exponents
// are mod d; basis anyon i has order orders[i].
struct AbelianData {
    int d = 2;
    std::vector<int> orders;
    std::vector<int> spins;
    std::vector<std::vector<int>> braiding;

    static AbelianData from(const AnyonTheory &th);
    // theta of sum_i c_i v_i, using theta(a+b) = theta(a) + theta(b) + B(a,b)
    int spin_of(const std::vector<int> &c) const;
    int braid_of(const std::vector<int> &a, const std::vector<int> &b) const;
};

// One decoupled pair, as coordinate vectors (mod p) over the input basis.
// spin(e) = spin(m) = 0 and B(e, m) = d/p.
struct EMPair {
    std::vector<int> e, m;
};

std::vector<EMPair> rearrange_em_pairs(const AbelianData &data, int p);
inline std::vector<EMPair> rearrange_em_pairs(const AnyonTheory &th, int p) {
    return rearrange_em_pairs(AbelianData::from(th), p);
}

// If a coordinate vector is a single basis element, its index; else -1.
int unit_index(const std::vector<int> &c);

// Smallest table (spins then upper braiding, row-major) over every basis of
// the group with the same invariant factors.  Only for small groups.
std::vector<int> brute_force_canonical(const AbelianData &data, long long max_tuples = 2000000);

}  // namespace anyonlab

#endif
