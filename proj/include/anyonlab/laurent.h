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

#ifndef ANYONLAB_LAURENT_H
#define ANYONLAB_LAURENT_H

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anyonlab {

inline int mod(long long v, int d) {
    long long r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

// Element of Z_d.  Phases exp(2 pi i e / d) are carried around as their exponent e.
class ZdScalar {
   public:
    ZdScalar(long long v, int d) : d_(d), v_(mod(v, d)) {
        if (d < 2) throw std::invalid_argument("modulus must be at least 2");
    }
    int value() const { return v_; }
    int modulus() const { return d_; }
    ZdScalar operator+(ZdScalar o) const { return {(long long)v_ + o.v_, d_}; }
    ZdScalar operator-(ZdScalar o) const { return {(long long)v_ - o.v_, d_}; }
    ZdScalar operator*(ZdScalar o) const { return {(long long)v_ * o.v_, d_}; }
    ZdScalar operator-() const { return {-(long long)v_, d_}; }
    bool operator==(const ZdScalar &o) const = default;

   private:
    int d_;
    int v_;
};

struct Mono {
    int a = 0;  // power of x
    int b = 0;  // power of y
    auto operator<=>(const Mono &) const = default;
};

struct Box {
    int amin = 0, amax = -1, bmin = 0, bmax = -1;
    bool empty() const { return amax < amin; }
    void add(Mono m);
    void add(const Box &o);
    Box shifted(int da, int db) const { return empty() ? *this : Box{amin + da, amax + da, bmin + db, bmax + db}; }
    // Largest |exponent| along each axis.
    int radius_x() const;
    int radius_y() const;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    size_t pos;
};

// Sparse Laurent polynomial over Z_d in x, y.  No zero coefficient is ever stored.
class Poly {
   public:
    using Terms = std::map<Mono, int>;

    explicit Poly(int d = 2);
    static Poly constant(long long c, int d);
    static Poly monomial(long long c, int a, int b, int d);

    int d() const { return d_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int coeff(int a, int b) const;
    void add_term(long long c, int a, int b);

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator-() const;
    Poly operator*(const Poly &o) const;
    Poly operator*(long long c) const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    bool operator==(const Poly &o) const { return d_ == o.d_ && terms_ == o.terms_; }

    // Multiplication by c x^a y^b; the hot path for translations.
    Poly shifted(int a, int b) const;
    Box support() const;

   private:
    int d_;
    Terms terms_;
};

Poly antipode(const Poly &f);

// Sum of c_m * c'_m over common monomials, i.e. the constant term of antipode(f) * g.
int pair_constant(const Poly &f, const Poly &g);

Poly poly_parse(std::string_view text, int d);
std::string poly_format(const Poly &f);

}  // namespace anyonlab

#endif
