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

#ifndef LIAISON_FIELD_HPP
#define LIAISON_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "liaison/errors.hpp"

namespace liaison {

/// Exact rational coefficients (arbitrary precision, always canonical:
/// coprime numerator/denominator, positive denominator).
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }

    Elem from_fraction(const std::string& num, const std::string& den) const {
        mpq_class q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (a == 0) fail(Errc::InvalidArgument, "inverse of zero");
        return Elem(1) / a;
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "QQ"; }

    bool operator==(const RationalField&) const { return true; }
};

/// GF(p) with p a prime below 2^31; elements stored as reduced residues.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            fail(Errc::InvalidArgument, "modulus must be a prime < 2^31: " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem from_fraction(const std::string& num, const std::string& den) const {
        mpz_class n(num), d(den);
        mpz_class nm = n % p_;
        if (nm < 0) nm += p_;
        mpz_class dm = d % p_;
        if (dm < 0) dm += p_;
        return div(static_cast<Elem>(nm.get_ui()), static_cast<Elem>(dm.get_ui()));
    }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) * b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem inv(Elem a) const {
        if (a == 0) fail(Errc::InvalidArgument, "inverse of zero");
        return pow(a, p_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    Elem pow(Elem a, std::uint64_t e) const {
        std::uint64_t base = a, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return static_cast<Elem>(acc);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

}  // namespace liaison

#endif
