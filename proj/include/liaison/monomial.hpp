/*
   Copyright 2026 The Liaison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIAISON_MONOMIAL_HPP
#define LIAISON_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

using Exponent = std::uint32_t;

/// Exponent vector; length always equals the number of ring variables.
struct Monomial {
    std::vector<Exponent> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline long long weighted_degree(const Monomial& m, const std::vector<int>& vardeg) {
    long long d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) d += static_cast<long long>(m.e[i]) * vardeg[i];
    return d;
}

inline long long total_degree(const Monomial& m) {
    long long d = 0;
    for (Exponent x : m.e) d += x;
    return d;
}

/// Product with a per-variable exponent cap (runaway-degree guard).
inline Monomial monomial_mul(const Monomial& a, const Monomial& b, Exponent cap) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        std::uint64_t s = std::uint64_t(a.e[i]) + b.e[i];
        if (s > cap) fail(Errc::DegreeCapExceeded, "exponent exceeds cap");
        r.e[i] = static_cast<Exponent>(s);
    }
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

/// b / a, assuming a | b.
inline Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.e.size());
    for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

struct MonomialOrder {
    enum class Kind { Grevlex, Lex, ElimBlock };
    Kind kind = Kind::Grevlex;
    std::size_t block = 0;  // ElimBlock: first `block` variables are eliminated

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elim_block(std::size_t k) { return {Kind::ElimBlock, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

namespace detail {

// grevlex on a variable range [lo, hi): by weighted degree, ties broken by
// the last differing variable, where the larger exponent loses.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b,
                             const std::vector<int>& vardeg, std::size_t lo, std::size_t hi) {
    long long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += static_cast<long long>(a.e[i]) * vardeg[i];
        db += static_cast<long long>(b.e[i]) * vardeg[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

}  // namespace detail

/// Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b.
inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order,
                             const std::vector<int>& vardeg) {
    if (a.e.size() != b.e.size()) fail(Errc::RingMismatch, "monomials from different rings");
    switch (order.kind) {
        case MonomialOrder::Kind::Grevlex:
            return detail::cmp_grevlex_range(a, b, vardeg, 0, a.e.size());
        case MonomialOrder::Kind::Lex:
            return detail::cmp_lex(a, b);
        case MonomialOrder::Kind::ElimBlock: {
            int c = detail::cmp_grevlex_range(a, b, vardeg, 0, order.block);
            if (c != 0) return c;
            return detail::cmp_grevlex_range(a, b, vardeg, order.block, a.e.size());
        }
    }
    return 0;
}

}  // namespace liaison

#endif
