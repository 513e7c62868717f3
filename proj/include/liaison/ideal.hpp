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

#ifndef LIAISON_IDEAL_HPP
#define LIAISON_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/ring_map.hpp"

namespace liaison {

/// Ideal with lazily cached reduced Groebner basis (in the ring's order).
/// Values are immutable; the cache is write-once, last-write-wins.
template <class F>
class Ideal {
public:
    using Field = F;

    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;  // zero generators dropped at construction
            require_same_ring(ring_, g.ring());
            gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }

    static Ideal unit(RingPtr<F> ring) {
        auto one = Polynomial<F>::constant(ring, ring->field().one());
        return Ideal(ring, {std::move(one)});
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }

    const GroebnerBasis<F>& groebner(const GroebnerOptions& opts = {}) const {
        auto cached = std::atomic_load(&gb_);
        if (!cached) {
            cached = std::make_shared<const GroebnerBasis<F>>(reduced_groebner(gens_, opts));
            std::atomic_store(&gb_, cached);
        }
        return *cached;
    }

    bool is_zero() const { return groebner().elements.empty(); }

    bool is_unit() const {
        const auto& gb = groebner();
        return !gb.elements.empty() && gb.elements.front().is_constant();
    }

    bool is_proper() const { return !is_unit(); }

    bool contains(const Polynomial<F>& f) const {
        return normal_form(f, groebner().elements).is_zero();
    }

    bool contains(const Ideal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    /// Canonical equality: identical reduced Groebner bases.
    bool operator==(const Ideal& o) const {
        require_same_ring(ring_, o.ring_);
        const auto& a = groebner().elements;
        const auto& b = o.groebner().elements;
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    bool homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    /// Generator degrees, descending.
    std::vector<long long> degrees() const {
        std::vector<long long> d;
        d.reserve(gens_.size());
        for (const auto& g : gens_) d.push_back(g.degree());
        std::sort(d.rbegin(), d.rend());
        return d;
    }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    mutable std::shared_ptr<const GroebnerBasis<F>> gb_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial<F>> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal<F>(a.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial<F>> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal<F>(a.ring(), std::move(gens));
}

namespace detail {

inline const char* kAuxVarPrefix = "@t";

/// Ring with auxiliary elimination variables in front (they form the
/// elimination block) followed by the original variables.
template <class F>
RingPtr<F> extended_ring(const Ring<F>& base, std::size_t naux) {
    std::vector<std::string> names;
    std::vector<int> degs;
    names.reserve(base.nvars() + naux);
    for (std::size_t i = 0; i < naux; ++i) {
        names.push_back(std::string(kAuxVarPrefix) + std::to_string(i));
        degs.push_back(1);
    }
    for (std::size_t i = 0; i < base.nvars(); ++i) {
        names.push_back(base.names()[i]);
        degs.push_back(base.degrees()[i]);
    }
    return Ring<F>::make(base.field(), std::move(names), RingMode::Affine,
                         MonomialOrder::elim_block(naux), std::move(degs),
                         base.exponent_cap());
}

template <class F>
bool involves_front_block(const Polynomial<F>& p, std::size_t k) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < k; ++i)
            if (t.m.e[i] != 0) return true;
    return false;
}

}  // namespace detail

/// Exact ideal intersection via elimination of one auxiliary variable:
/// I cap J = (t*I + (1-t)*J) cap R.
template <class F>
Ideal<F> intersection(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& opts = {}) {
    require_same_ring(a.ring(), b.ring());
    const RingPtr<F>& R = a.ring();
    if (a.generators().empty() || b.generators().empty()) return Ideal<F>::zero(R);

    RingPtr<F> E = detail::extended_ring(*R, 1);
    std::vector<std::size_t> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = i + 1;

    Polynomial<F> t = Polynomial<F>::variable(E, 0);
    Polynomial<F> one = Polynomial<F>::constant(E, E->field().one());
    std::vector<Polynomial<F>> gens;
    for (const auto& f : a.generators()) gens.push_back(t * map_polynomial(f, E, up));
    for (const auto& g : b.generators()) gens.push_back((one - t) * map_polynomial(g, E, up));

    GroebnerBasis<F> gb = reduced_groebner(gens, opts);
    std::vector<Polynomial<F>> result;
    for (const auto& h : gb.elements)
        if (!detail::involves_front_block(h, 1)) result.push_back(project_polynomial(h, R));
    return Ideal<F>(R, std::move(result));
}

/// Colon by a single polynomial: [I : (g)] from I cap (g), dividing by g.
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& g, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), g.ring());
    if (g.is_zero()) return Ideal<F>::unit(I.ring());
    Ideal<F> cap = intersection(I, Ideal<F>(I.ring(), {g}), opts);
    std::vector<Polynomial<F>> gens;
    gens.reserve(cap.generators().size());
    for (const auto& h : cap.generators()) gens.push_back(exact_divide(h, g));
    return Ideal<F>(I.ring(), std::move(gens));
}

/// Ideal quotient [I : J] = {f : f*J in I}.
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Ideal<F>& J, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), J.ring());
    if (J.generators().empty()) return Ideal<F>::unit(I.ring());
    bool first = true;
    Ideal<F> acc = Ideal<F>::zero(I.ring());
    for (const auto& g : J.generators()) {
        Ideal<F> q = colon(I, g, opts);
        acc = first ? q : intersection(acc, q, opts);
        first = false;
    }
    return acc;
}

/// Saturation [I : J^inf]: iterate colon to the fixed point.
template <class F>
Ideal<F> saturation(const Ideal<F>& I, const Ideal<F>& J, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), J.ring());
    Ideal<F> cur = I;
    for (;;) {
        Ideal<F> next = colon(cur, J, opts);
        if (next == cur) return cur;
        cur = next;
    }
}

/// I cap k[remaining variables], returned over the smaller ring. The empty
/// variable list is the identity.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::size_t>& vars,
                   const GroebnerOptions& opts = {}) {
    const RingPtr<F>& R = I.ring();
    if (vars.empty()) return I;
    std::vector<bool> drop(R->nvars(), false);
    for (std::size_t v : vars) {
        if (v >= R->nvars()) fail(Errc::InvalidArgument, "eliminate: variable out of range");
        drop[v] = true;
    }

    // reordered ring: eliminated variables first
    std::vector<std::string> names;
    std::vector<int> degs;
    std::vector<std::size_t> vm(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i)
        if (drop[i]) {
            vm[i] = names.size();
            names.push_back(R->names()[i]);
            degs.push_back(R->degrees()[i]);
        }
    std::size_t k = names.size();
    std::vector<std::string> rem_names;
    std::vector<int> rem_degs;
    for (std::size_t i = 0; i < R->nvars(); ++i)
        if (!drop[i]) {
            vm[i] = names.size();
            names.push_back(R->names()[i]);
            degs.push_back(R->degrees()[i]);
            rem_names.push_back(R->names()[i]);
            rem_degs.push_back(R->degrees()[i]);
        }

    RingPtr<F> E = Ring<F>::make(R->field(), names, RingMode::Affine,
                                 MonomialOrder::elim_block(k), degs, R->exponent_cap());
    RingPtr<F> Q = Ring<F>::make(R->field(), rem_names, R->mode(), MonomialOrder::grevlex(),
                                 rem_degs, R->exponent_cap());

    std::vector<Polynomial<F>> gens;
    for (const auto& f : I.generators()) gens.push_back(map_polynomial(f, E, vm));
    GroebnerBasis<F> gb = reduced_groebner(gens, opts);
    std::vector<Polynomial<F>> result;
    for (const auto& h : gb.elements)
        if (!detail::involves_front_block(h, k)) result.push_back(project_polynomial(h, Q));
    return Ideal<F>(Q, std::move(result));
}

namespace detail {

// minimum vertex cover over generator supports (branch and bound)
inline void min_cover_rec(const std::vector<std::uint64_t>& supports, std::uint64_t covered,
                          std::size_t taken, std::size_t& best) {
    if (taken >= best) return;
    std::uint64_t pending = 0;
    bool found = false;
    for (std::uint64_t s : supports)
        if ((s & covered) == 0) {
            pending = s;
            found = true;
            break;
        }
    if (!found) {
        best = taken;
        return;
    }
    for (std::size_t v = 0; v < 64; ++v)
        if (pending & (std::uint64_t(1) << v))
            min_cover_rec(supports, covered | (std::uint64_t(1) << v), taken + 1, best);
}

}  // namespace detail

/// Krull dimension of R/I, computed combinatorially from the leading-term
/// ideal (maximal variable subsets missing every generator support).
template <class F>
std::size_t krull_dimension(const Ideal<F>& I) {
    const Ring<F>& R = *I.ring();
    if (R.nvars() > 64) fail(Errc::InvalidArgument, "dimension: too many variables");
    if (I.is_unit()) fail(Errc::UnitIdeal, "dimension of the unit ideal");
    std::vector<Monomial> lts = leading_term_ideal(I.groebner());
    std::vector<std::uint64_t> supports;
    supports.reserve(lts.size());
    for (const auto& m : lts) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0) s |= std::uint64_t(1) << i;
        supports.push_back(s);
    }
    std::size_t best = R.nvars();
    detail::min_cover_rec(supports, 0, 0, best);
    return R.nvars() - best;
}

template <class F>
std::size_t codimension(const Ideal<F>& I) {
    return I.ring()->nvars() - krull_dimension(I);
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/I.
struct HilbertSeries {
    std::vector<long long> numerator;  // coefficient of t^j at index j
    std::size_t nvars = 0;

    /// dim_k (R/I)_d, from the numerator.
    long long value_at(long long d) const {
        if (d < 0) return 0;
        long long acc = 0;
        for (std::size_t j = 0; j < numerator.size(); ++j) {
            long long e = d - static_cast<long long>(j);
            if (e < 0 || numerator[j] == 0) continue;
            // binom(e + nvars - 1, nvars - 1)
            long long b = 1;
            for (std::size_t i = 1; i < nvars; ++i) b = b * (e + static_cast<long long>(i)) / static_cast<long long>(i);
            acc += numerator[j] * b;
        }
        return acc;
    }
};

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    // smaller degree first so divisors are kept before multiples
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        long long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a.e < b.e;
    });
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (monomial_divides(h, m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

inline std::vector<long long> hn_sub(std::vector<long long> a, const std::vector<long long>& b,
                                     std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Hilbert numerator of a monomial ideal by the standard colon recursion:
// N(G + m) = N(G) - t^{deg m} N(G : m).
inline std::vector<long long> hilbert_numerator_monomial(std::vector<Monomial> gens,
                                                         const std::vector<int>& vardeg) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};
    Monomial pivot = gens.back();
    gens.pop_back();
    std::vector<Monomial> quot;
    quot.reserve(gens.size());
    for (const auto& m : gens) quot.push_back(monomial_div(m, monomial_gcd(m, pivot)));
    std::vector<long long> a = hilbert_numerator_monomial(gens, vardeg);
    std::vector<long long> b = hilbert_numerator_monomial(std::move(quot), vardeg);
    return hn_sub(std::move(a), b, static_cast<std::size_t>(weighted_degree(pivot, vardeg)));
}

}  // namespace detail

template <class F>
HilbertSeries hilbert_series(const Ideal<F>& I, const GroebnerOptions& opts = {}) {
    const Ring<F>& R = *I.ring();
    if (!R.graded()) fail(Errc::ModeMismatch, "Hilbert series requires a graded ring");
    for (const auto& g : I.generators())
        if (!g.is_homogeneous())
            fail(Errc::NotHomogeneous, "Hilbert series requires homogeneous generators");
    std::vector<Monomial> lts = leading_term_ideal(I.groebner(opts));
    HilbertSeries hs;
    hs.nvars = R.nvars();
    hs.numerator = detail::hilbert_numerator_monomial(std::move(lts), R.degrees());
    return hs;
}

/// Minimal homogeneous generating set (ascending-degree sieve; graded rings).
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I, const GroebnerOptions& opts = {}) {
    const Ring<F>& R = *I.ring();
    if (!R.graded()) fail(Errc::ModeMismatch, "minimal generators require a graded ring");
    std::vector<Polynomial<F>> cands = I.groebner(opts).elements;
    for (const auto& g : cands)
        if (!g.is_homogeneous())
            fail(Errc::NotHomogeneous, "minimal generators require a homogeneous ideal");
    std::sort(cands.begin(), cands.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial<F>> kept;
    for (const auto& g : cands) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        GroebnerBasis<F> gb = reduced_groebner(kept, opts);
        if (!normal_form(g, gb.elements).is_zero()) kept.push_back(g);
    }
    return kept;
}

}  // namespace liaison

#endif
