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

#ifndef LIAISON_POLYNOMIAL_HPP
#define LIAISON_POLYNOMIAL_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/ring.hpp"

namespace liaison {

/// Degree sentinel for the zero polynomial / zero module.
inline constexpr long long kNegInfDegree = std::numeric_limits<long long>::min();

template <class F>
struct Term {
    typename F::Elem c;
    Monomial m;
};

/// Sparse multivariate polynomial in canonical form: nonzero coefficients,
/// no duplicate monomials, terms strictly descending in the ring's order.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr<F> ring, std::vector<Term<F>> terms) : ring_(std::move(ring)) {
        terms_ = normalize(*ring_, std::move(terms));
    }

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        std::vector<Term<F>> t;
        if (!ring->field().is_zero(c)) t.push_back({std::move(c), Monomial(ring->nvars())});
        Polynomial p(std::move(ring));
        p.terms_ = std::move(t);
        return p;
    }

    static Polynomial monomial(RingPtr<F> ring, Elem c, Monomial m) {
        std::vector<Term<F>> t;
        if (!ring->field().is_zero(c)) t.push_back({std::move(c), std::move(m)});
        Polynomial p(std::move(ring));
        p.terms_ = std::move(t);
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::size_t idx) {
        Monomial m(ring->nvars());
        m.e[idx] = 1;
        return monomial(ring, ring->field().one(), std::move(m));
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term<F>& leading() const {
        if (terms_.empty()) fail(Errc::InvalidArgument, "leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading().m; }
    const Elem& leading_coeff() const { return leading().c; }

    bool is_constant() const { return terms_.empty() || terms_.front().m.is_one(); }

    /// Max weighted degree over terms; kNegInfDegree for zero.
    long long degree() const {
        long long d = kNegInfDegree;
        for (const auto& t : terms_) d = std::max(d, ring_->degree_of(t.m));
        return d;
    }

    /// Degree if homogeneous (zero counts as homogeneous with -inf degree),
    /// nullopt otherwise. Graded-mode rings only.
    std::optional<long long> homogeneous_degree() const {
        if (!ring_->graded()) fail(Errc::ModeMismatch, "homogeneity check on affine ring");
        if (terms_.empty()) return kNegInfDegree;
        long long d = ring_->degree_of(terms_.front().m);
        for (const auto& t : terms_)
            if (ring_->degree_of(t.m) != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = ring_->field().neg(t.c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        const F& k = ring_->field();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ring_->compare(terms_[i].m, o.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Elem s = k.add(terms_[i].c, o.terms_[j].c);
                if (!k.is_zero(s)) r.terms_.push_back({std::move(s), terms_[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    /// Multiply by coeff * monomial.
    Polynomial times_term(const Elem& c, const Monomial& m) const {
        const F& k = ring_->field();
        Polynomial r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({k.mul(t.c, c), monomial_mul(t.m, m, ring_->exponent_cap())});
        return r;  // order preserved: monomial orders are multiplicative
    }

    Polynomial scale(const Elem& c) const { return times_term(c, Monomial(ring_->nvars())); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        if (is_zero() || o.is_zero()) return r;
        std::vector<Term<F>> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                acc.push_back({ring_->field().mul(a.c, b.c),
                               monomial_mul(a.m, b.m, ring_->exponent_cap())});
        r.terms_ = normalize(*ring_, std::move(acc));
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
        if (!ring_->compatible(*o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || !ring_->field().eq(terms_[i].c, o.terms_[i].c))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(ring_->field().inv(leading_coeff()));
    }

    /// Over QQ: clear denominators and divide out integer content, leading
    /// coefficient positive. Elsewhere: monic. Keeps rational GB runs small.
    Polynomial primitive() const {
        if (is_zero()) return *this;
        if constexpr (std::is_same_v<typename F::Elem, mpq_class>) {
            mpz_class den_lcm = 1, num_gcd = 0;
            for (const auto& t : terms_) {
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        t.c.get_den().get_mpz_t());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
            }
            mpq_class s(den_lcm, num_gcd);
            s.canonicalize();
            if (leading_coeff() < 0) s = -s;
            return scale(s);
        } else {
            return monic();
        }
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const F& k = ring_->field();
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Elem c = t.c;
            bool negative = false;
            if constexpr (std::is_same_v<Elem, mpq_class>) {
                if (c < 0) {
                    negative = true;
                    c = -c;
                }
            }
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            bool coeff_one = k.is_one(c);
            bool has_vars = !t.m.is_one();
            if (!coeff_one || !has_vars) os << k.to_string(c);
            if (has_vars) {
                bool star = !coeff_one;
                for (std::size_t i = 0; i < t.m.e.size(); ++i) {
                    if (t.m.e[i] == 0) continue;
                    if (star) os << "*";
                    os << ring_->names()[i];
                    if (t.m.e[i] > 1) os << "^" << t.m.e[i];
                    star = true;
                }
            }
        }
        return os.str();
    }

    /// Sort descending, merge duplicates, drop zeros.
    static std::vector<Term<F>> normalize(const Ring<F>& ring, std::vector<Term<F>> ts) {
        std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
            return ring.compare(a.m, b.m) > 0;
        });
        std::vector<Term<F>> out;
        out.reserve(ts.size());
        for (auto& t : ts) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = ring.field().add(out.back().c, t.c);
            } else {
                out.push_back(std::move(t));
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const Term<F>& t) { return ring.field().is_zero(t.c); }),
                  out.end());
        return out;
    }

private:
    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

/// Exact quotient f / g; fails if g does not divide f.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) fail(Errc::InvalidArgument, "division by zero polynomial");
    const F& k = f.ring()->field();
    Polynomial<F> q = Polynomial<F>::zero(f.ring());
    Polynomial<F> rem = f;
    while (!rem.is_zero()) {
        if (!monomial_divides(g.leading_monomial(), rem.leading_monomial()))
            fail(Errc::Internal, "exact_divide: not divisible");
        Monomial m = monomial_div(rem.leading_monomial(), g.leading_monomial());
        typename F::Elem c = k.div(rem.leading_coeff(), g.leading_coeff());
        q = q + Polynomial<F>::monomial(f.ring(), c, m);
        rem = rem - g.times_term(c, m);
    }
    return q;
}

}  // namespace liaison

#endif
