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

#include "anyonlab/rearrange.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace anyonlab {

AbelianData AbelianData::from(const AnyonTheory &th) {
    AbelianData a;
    a.d = th.d;
    for (auto &b : th.basis) a.orders.push_back(b.order);
    a.spins = th.spins;
    a.braiding = th.braiding;
    return a;
}

int AbelianData::spin_of(const std::vector<int> &c) const {
    long long e = 0;
    int n = (int)c.size();
    for (int i = 0; i < n; i++) {
        if (!c[i]) continue;
        e += (long long)c[i] * c[i] % d * spins[i];
        for (int j = i + 1; j < n; j++) e += (long long)c[i] * c[j] % d * braiding[i][j];
    }
    return mod(e, d);
}

int AbelianData::braid_of(const std::vector<int> &a, const std::vector<int> &b) const {
    long long e = 0;
    for (size_t i = 0; i < a.size(); i++)
        if (a[i])
            for (size_t j = 0; j < b.size(); j++) e += (long long)a[i] * b[j] % d * braiding[i][j];
    return mod(e, d);
}

int unit_index(const std::vector<int> &c) {
    int idx = -1;
    for (size_t i = 0; i < c.size(); i++) {
        if (!c[i]) continue;
        if (c[i] != 1 || idx >= 0) return -1;
        idx = (int)i;
    }
    return idx;
}

namespace {

using Vec = std::vector<int>;

int inv_p(int a, int p) {
    for (int k = 1; k < p; k++)
        if (a * k % p == 1) return k;
    throw std::logic_error("no inverse");
}

Vec axpy(const Vec &a, int k, const Vec &b, int p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = mod(a[i] + (long long)k * b[i], p);
    return r;
}

// Candidates: the current generators, then their combinations in base-p order.
template <class F>
bool first_match(const std::vector<Vec> &gens, int p, F pred, Vec &out) {
    for (auto &g : gens)
        if (pred(g)) {
            out = g;
            return true;
        }
    int k = (int)gens.size();
    long long total = 1;
    for (int i = 0; i < k; i++) {
        total *= p;
        if (total > 4000000) throw RearrangeError("search space too large");
    }
    int n = gens.empty() ? 0 : (int)gens[0].size();
    for (long long code = 1; code < total; code++) {
        Vec c(n, 0);
        long long t = code;
        for (int i = 0; i < k; i++, t /= p)
            if (t % p) c = axpy(c, (int)(t % p), gens[i], p);
        if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) continue;
        if (pred(c)) {
            out = c;
            return true;
        }
    }
    return false;
}

// Row-reduces to test independence over F_p.
struct Span {
    int p;
    std::vector<Vec> rows;
    std::vector<int> piv;
    bool add(Vec v) {
        for (size_t r = 0; r < rows.size(); r++)
            if (v[piv[r]]) v = axpy(v, p - v[piv[r]], rows[r], p);
        int c = 0;
        while (c < (int)v.size() && !v[c]) c++;
        if (c == (int)v.size()) return false;
        int inv = inv_p(v[c], p);
        for (auto &x : v) x = x * inv % p;
        rows.push_back(v);
        piv.push_back(c);
        return true;
    }
};

}  // namespace

std::vector<EMPair> rearrange_em_pairs(const AbelianData &data, int p) {
    int n = (int)data.orders.size();
    if (!is_prime(p)) throw RearrangeError("rearrangement needs a prime p");
    if (data.d % p) throw RearrangeError("p must divide d");
    for (int o : data.orders)
        if (o != p) throw RearrangeError("every basis anyon must have order p");
    int u = data.d / p;
    auto bp = [&](const Vec &a, const Vec &b) {
        int e = data.braid_of(a, b);
        if (e % u) throw RearrangeError("braiding is not a p-th root of unity");
        return e / u % p;
    };
    std::vector<Vec> gens;
    for (int i = 0; i < n; i++) {
        Vec e(n, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    std::vector<EMPair> out;
    while (!gens.empty()) {
        Vec b, c;
        if (!first_match(gens, p, [&](const Vec &v) { return data.spin_of(v) == 0; }, b))
            throw RearrangeError("no nontrivial boson among the remaining anyons");
        if (!first_match(gens, p, [&](const Vec &v) { return bp(b, v) != 0; }, c))
            throw RearrangeError("boson braids trivially with every remaining anyon");
        // scale so that B(b, c) is exactly exp(2 pi i / p)
        c = axpy(Vec(n, 0), inv_p(bp(b, c), p), c, p);
        // c -> c - k b fixes theta(c) since theta(c - k b) = theta(c) - k d/p
        int th = data.spin_of(c);
        if (th % u) throw RearrangeError("cannot bosonize the partner anyon");
        c = axpy(c, p - (th / u) % p, b, p);
        if (data.spin_of(c) != 0) throw RearrangeError("bosonization failed");
        std::vector<Vec> rest;
        Span span{p, {}, {}};
        span.add(b);
        span.add(c);
        for (auto &w : gens) {
            Vec x = axpy(w, p - bp(w, c), b, p);
            x = axpy(x, p - bp(w, b), c, p);
            if (span.add(x)) rest.push_back(x);
        }
        out.push_back({b, c});
        gens = rest;
    }
    return out;
}

std::vector<int> brute_force_canonical(const AbelianData &data, long long max_tuples) {
    int k = (int)data.orders.size();
    long long size = 1;
    for (int o : data.orders) size *= o;
    long long tuples = 1;
    for (int i = 0; i < k; i++) {
        tuples *= size;
        if (tuples > max_tuples) throw RearrangeError("group too large for brute-force canonical form");
    }
    std::vector<Vec> elems;
    for (long long code = 0; code < size; code++) {
        Vec c(k);
        long long t = code;
        for (int i = 0; i < k; i++) {
            c[i] = (int)(t % data.orders[i]);
            t /= data.orders[i];
        }
        elems.push_back(c);
    }
    auto order_of = [&](const Vec &c) {
        long long o = 1;
        for (int i = 0; i < k; i++) {
            long long oi = data.orders[i] / std::gcd(c[i], data.orders[i]);
            o = std::lcm(o, oi);
        }
        return (int)o;
    };
    auto subgroup_size = [&](const std::vector<int> &pick) {
        std::set<Vec> seen{Vec(k, 0)};
        std::vector<Vec> frontier{Vec(k, 0)};
        while (!frontier.empty()) {
            Vec cur = frontier.back();
            frontier.pop_back();
            for (int g : pick) {
                Vec nx(k);
                for (int i = 0; i < k; i++) nx[i] = (cur[i] + elems[g][i]) % data.orders[i];
                if (seen.insert(nx).second) frontier.push_back(nx);
            }
        }
        return (long long)seen.size();
    };
    std::vector<int> best;
    std::vector<int> pick(k, 0);
    for (long long code = 0; code < tuples; code++) {
        long long t = code;
        bool ok = true;
        for (int i = 0; i < k; i++, t /= size) {
            pick[i] = (int)(t % size);
            if (order_of(elems[pick[i]]) != data.orders[i]) ok = false;
        }
        if (!ok) continue;
        std::vector<int> table;
        for (int i = 0; i < k; i++) table.push_back(data.spin_of(elems[pick[i]]));
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++) table.push_back(data.braid_of(elems[pick[i]], elems[pick[j]]));
        if (!best.empty() && !(table < best)) continue;
        if (subgroup_size(pick) != size) continue;
        best = table;
    }
    return best;
}

}  // namespace anyonlab
