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

#include "anyonlab/laurent.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace anyonlab {

void Box::add(Mono m) {
    if (empty()) {
        *this = {m.a, m.a, m.b, m.b};
        return;
    }
    amin = std::min(amin, m.a);
    amax = std::max(amax, m.a);
    bmin = std::min(bmin, m.b);
    bmax = std::max(bmax, m.b);
}

void Box::add(const Box &o) {
    if (o.empty()) return;
    add(Mono{o.amin, o.bmin});
    add(Mono{o.amax, o.bmax});
}

int Box::radius_x() const { return empty() ? 0 : std::max(std::abs(amin), std::abs(amax)); }
int Box::radius_y() const { return empty() ? 0 : std::max(std::abs(bmin), std::abs(bmax)); }

Poly::Poly(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("modulus must be at least 2");
}

Poly Poly::constant(long long c, int d) { return monomial(c, 0, 0, d); }

Poly Poly::monomial(long long c, int a, int b, int d) {
    Poly p(d);
    p.add_term(c, a, b);
    return p;
}

int Poly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(long long c, int a, int b) {
    int v = mod(c, d_);
    if (v == 0) return;
    auto [it, fresh] = terms_.try_emplace({a, b}, v);
    if (!fresh) {
        it->second = mod((long long)it->second + v, d_);
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same(int d1, int d2) {
    if (d1 != d2) throw std::invalid_argument("mixed moduli");
}

Poly &Poly::operator+=(const Poly &o) {
    check_same(d_, o.d_);
    for (auto &[m, c] : o.terms_) add_term(c, m.a, m.b);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    check_same(d_, o.d_);
    for (auto &[m, c] : o.terms_) add_term(-(long long)c, m.a, m.b);
    return *this;
}

Poly Poly::operator+(const Poly &o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const { return *this * -1; }

Poly Poly::operator*(long long c) const {
    Poly r(d_);
    int cc = mod(c, d_);
    if (cc == 0) return r;
    for (auto &[m, v] : terms_) {
        int p = mod((long long)v * cc, d_);
        if (p) r.terms_.emplace_hint(r.terms_.end(), m, p);
    }
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    check_same(d_, o.d_);
    Poly r(d_);
    for (auto &[m1, c1] : terms_)
        for (auto &[m2, c2] : o.terms_) r.add_term((long long)c1 * c2, m1.a + m2.a, m1.b + m2.b);
    return r;
}

Poly Poly::shifted(int a, int b) const {
    Poly r(d_);
    // the shift preserves the (a, b) ordering so hints keep this linear
    for (auto &[m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Mono{m.a + a, m.b + b}, c);
    return r;
}

Box Poly::support() const {
    Box bx;
    for (auto &[m, c] : terms_) bx.add(m);
    return bx;
}

Poly antipode(const Poly &f) {
    Poly r(f.d());
    for (auto &[m, c] : f.terms()) r.add_term(c, -m.a, -m.b);
    return r;
}

int pair_constant(const Poly &f, const Poly &g) {
    check_same(f.d(), g.d());
    const Poly &small = f.size() <= g.size() ? f : g;
    const Poly &large = f.size() <= g.size() ? g : f;
    long long acc = 0;
    for (auto &[m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it != large.terms().end()) acc += (long long)c * it->second;
    }
    return mod(acc, f.d());
}

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            i++;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit((unsigned char)s[i]);
    }
    long long number() {
        skip();
        size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            if (v > (1LL << 50)) throw ParseError("number too large", start);
            v = v * 10 + (s[i] - '0');
            i++;
        }
        if (i == start) throw ParseError("expected integer", start);
        return v;
    }
    int exponent() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        long long v = number();
        if (v > (1 << 24)) throw ParseError("exponent out of range", i);
        return (int)(neg ? -v : v);
    }
};

}  // namespace

Poly poly_parse(std::string_view text, int d) {
    Poly out(d);
    Parser p{text};
    p.skip();
    if (p.i == text.size()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (true) {
        p.skip();
        if (p.i >= text.size()) break;
        long long sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError(std::string("unexpected character '") + text[p.i] + "'", p.i);
        }
        first = false;
        p.skip();
        size_t term_start = p.i;
        long long coef = 1;
        bool have_any = false;
        if (p.peek_digit()) {
            coef = p.number();
            have_any = true;
            if (p.i < text.size() && text[p.i] == '.')
                throw ParseError("non-integer coefficient", p.i);
            p.eat('*');
        }
        int ea = 0, eb = 0;
        while (true) {
            p.skip();
            if (p.i >= text.size()) break;
            char c = text[p.i];
            if (c != 'x' && c != 'y') break;
            p.i++;
            int e = 1;
            if (p.eat('^')) e = p.exponent();
            (c == 'x' ? ea : eb) += e;
            have_any = true;
            p.eat('*');
        }
        if (!have_any) throw ParseError("expected term", term_start);
        out.add_term(mod(coef, d) * sign, ea, eb);
    }
    if (first) throw ParseError("empty polynomial", 0);
    return out;
}

static std::string factor(char v, int e) {
    if (e == 0) return "";
    if (e == 1) return std::string(1, v);
    return std::string(1, v) + "^" + std::to_string(e);
}

std::string poly_format(const Poly &f) {
    if (f.is_zero()) return "0";
    // print by increasing y power, then x, using the signed representative of each coefficient
    std::map<std::pair<int, int>, int> ordered;
    for (auto &[m, c] : f.terms()) ordered[{m.b, m.a}] = c;
    std::ostringstream out;
    bool first = true;
    for (auto &[key, c] : ordered) {
        auto [b, a] = key;
        int v = c;
        bool neg = 2 * c > f.d();
        if (neg) v = f.d() - c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        std::string mono = factor('x', a);
        std::string fy = factor('y', b);
        if (!mono.empty() && !fy.empty()) mono += "*";
        mono += fy;
        if (mono.empty())
            out << v;
        else if (v == 1)
            out << mono;
        else
            out << v << mono;
    }
    return out.str();
}

}  // namespace anyonlab
