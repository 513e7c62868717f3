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

#ifndef LIAISON_GROEBNER_HPP
#define LIAISON_GROEBNER_HPP

#include <utility>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

struct GroebnerOptions {
    // Total-degree abort threshold for runaway computations.
    long long degree_cap = 40;
};

template <class F>
struct GroebnerBasis {
    std::vector<Polynomial<F>> elements;
    MonomialOrder order;
    bool reduced = false;
};

/// Full normal form: no term of the result is divisible by any basis leading
/// term. Deterministic: highest reducible term first, first matching reducer.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
    if (basis.empty()) return f;
    const F& k = f.ring()->field();
    Polynomial<F> r = f;
    for (;;) {
        bool reduced_any = false;
        for (std::size_t ti = 0; ti < r.terms().size() && !reduced_any; ++ti) {
            const auto& t = r.terms()[ti];
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                if (!monomial_divides(g.leading_monomial(), t.m)) continue;
                typename F::Elem c = k.div(t.c, g.leading_coeff());
                Monomial m = monomial_div(t.m, g.leading_monomial());
                r = r - g.times_term(c, m);
                reduced_any = true;
                break;
            }
        }
        if (!reduced_any) return r;
    }
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    require_same_ring(f.ring(), g.ring());
    const F& k = f.ring()->field();
    Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<F> a = f.times_term(k.inv(f.leading_coeff()), monomial_div(l, f.leading_monomial()));
    Polynomial<F> b = g.times_term(k.inv(g.leading_coeff()), monomial_div(l, g.leading_monomial()));
    return a - b;
}

namespace detail {

template <class F>
struct GbPair {
    std::size_t i, j;
    Monomial lcm;
    long long deg;
};

// Pair selection: normal strategy (minimal lcm degree, ties by lcm order,
// then indices).
template <class F>
std::size_t select_pair(const std::vector<GbPair<F>>& pairs, const Ring<F>& ring) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto& a = pairs[i];
        const auto& b = pairs[best];
        if (a.deg != b.deg) {
            if (a.deg < b.deg) best = i;
            continue;
        }
        int c = ring.compare(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = i;
    }
    return best;
}

// Pair update with both Buchberger criteria (coprime leading terms and the
// Gebauer-Moeller chain conditions), following the standard UPDATE routine.
template <class F>
void update_pairs(std::vector<Polynomial<F>>& basis, std::vector<GbPair<F>>& pairs,
                  Polynomial<F> h, const Ring<F>& ring) {
    const std::size_t hi = basis.size();
    const Monomial& lth = h.leading_monomial();

    std::vector<GbPair<F>> cand;
    cand.reserve(hi);
    for (std::size_t g = 0; g < hi; ++g) {
        if (basis[g].is_zero()) continue;
        Monomial l = monomial_lcm(basis[g].leading_monomial(), lth);
        cand.push_back({g, hi, l, ring.degree_of(l)});
    }

    // keep a candidate if its leading terms are coprime (so it can prune
    // others) or no other candidate lcm strictly divides it
    std::vector<GbPair<F>> kept;
    std::vector<bool> removed(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
        if (removed[a]) continue;
        bool coprime_a = monomial_coprime(basis[cand[a].i].leading_monomial(), lth);
        if (!coprime_a) {
            bool dominated = false;
            for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
                if (b == a || removed[b]) continue;
                if (monomial_divides(cand[b].lcm, cand[a].lcm) && cand[b].lcm != cand[a].lcm)
                    dominated = true;
            }
            for (const auto& kp : kept) {
                if (dominated) break;
                if (monomial_divides(kp.lcm, cand[a].lcm) && kp.lcm != cand[a].lcm)
                    dominated = true;
            }
            if (dominated) {
                removed[a] = true;
                continue;
            }
        }
        // among equal lcms keep a single representative
        for (std::size_t b = a + 1; b < cand.size(); ++b)
            if (!removed[b] && cand[b].lcm == cand[a].lcm) removed[b] = true;
        kept.push_back(cand[a]);
    }

    // drop coprime pairs (Buchberger's first criterion)
    std::vector<GbPair<F>> fresh;
    for (auto& p : kept)
        if (!monomial_coprime(basis[p.i].leading_monomial(), lth)) fresh.push_back(std::move(p));

    // prune old pairs whose lcm is divisible by lt(h) strictly through both
    std::vector<GbPair<F>> survivors;
    survivors.reserve(pairs.size());
    for (auto& p : pairs) {
        Monomial li = monomial_lcm(basis[p.i].leading_monomial(), lth);
        Monomial lj = monomial_lcm(basis[p.j].leading_monomial(), lth);
        bool drop = monomial_divides(lth, p.lcm) && li != p.lcm && lj != p.lcm;
        if (!drop) survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (auto& p : fresh) pairs.push_back(std::move(p));
    basis.push_back(std::move(h));
}

}  // namespace detail

/// Buchberger's algorithm. Output generates the same ideal; every
/// S-polynomial reduces to zero. Not reduced; see reduce_basis.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens,
                            const GroebnerOptions& opts = {}) {
    GroebnerBasis<F> gb;
    std::vector<Polynomial<F>> basis;
    std::vector<detail::GbPair<F>> pairs;
    RingPtr<F> ring;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring) ring = g.ring();
        require_same_ring(ring, g.ring());
        detail::update_pairs(basis, pairs, g.primitive(), *ring);
    }
    gb.order = ring ? ring->order() : MonomialOrder::grevlex();
    if (!ring) return gb;

    while (!pairs.empty()) {
        std::size_t sel = detail::select_pair(pairs, *ring);
        detail::GbPair<F> p = pairs[sel];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(sel));
        if (total_degree(p.lcm) > opts.degree_cap)
            fail(Errc::DegreeCapExceeded,
                 "S-pair degree " + std::to_string(total_degree(p.lcm)) + " exceeds cap " +
                     std::to_string(opts.degree_cap));
        Polynomial<F> s = s_polynomial(basis[p.i], basis[p.j]);
        Polynomial<F> h = normal_form(s, basis);
        if (!h.is_zero()) detail::update_pairs(basis, pairs, h.primitive(), *ring);
    }
    gb.elements = std::move(basis);
    return gb;
}

namespace detail {

/// Minimalize, tail-reduce, normalize, and sort an already-complete basis.
template <class F>
GroebnerBasis<F> reduce_complete_basis(const GroebnerBasis<F>& gb) {
    GroebnerBasis<F> out;
    out.order = gb.order;
    out.reduced = true;
    if (gb.elements.empty()) return out;
    const RingPtr<F>& ring = gb.elements.front().ring();

    std::vector<Polynomial<F>> elems;
    for (const auto& g : gb.elements)
        if (!g.is_zero()) elems.push_back(g);
    std::sort(elems.begin(), elems.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial<F>> minimal;
    for (const auto& g : elems) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (monomial_divides(h.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // tail-reduce each element against the others
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Polynomial<F>& a, const Polynomial<F>& b) {
                  return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
              });
    out.elements = std::move(minimal);
    return out;
}

}  // namespace detail

/// The unique reduced Groebner basis: monic, pairwise irreducible, sorted
/// ascending by leading term. Inputs that are not yet a Groebner basis are
/// completed first.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb, const GroebnerOptions& opts = {}) {
    return detail::reduce_complete_basis(buchberger(gb.elements, opts));
}

template <class F>
GroebnerBasis<F> reduced_groebner(const std::vector<Polynomial<F>>& gens,
                                  const GroebnerOptions& opts = {}) {
    return detail::reduce_complete_basis(buchberger(gens, opts));
}

/// Minimal monomial generators of the leading term ideal.
template <class F>
std::vector<Monomial> leading_term_ideal(const GroebnerBasis<F>& gb) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.elements) {
        if (g.is_zero()) continue;
        const Monomial& m = g.leading_monomial();
        bool redundant = false;
        for (const auto& h : lts)
            if (monomial_divides(h, m)) {
                redundant = true;
                break;
            }
        if (!redundant) lts.push_back(m);
    }
    return lts;
}

/// Direct Buchberger postcondition check (test oracle).
template <class F>
bool all_s_polynomials_reduce(const GroebnerBasis<F>& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
            if (!normal_form(s_polynomial(gb.elements[i], gb.elements[j]), gb.elements).is_zero())
                return false;
    return true;
}

}  // namespace liaison

#endif
