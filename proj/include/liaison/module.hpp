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

#ifndef LIAISON_MODULE_HPP
#define LIAISON_MODULE_HPP

#include <algorithm>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Graded free module sum R(-a_i), stored as [a_1..a_k].
struct FreeModule {
    std::vector<long long> twists;

    FreeModule() = default;
    explicit FreeModule(std::vector<long long> tw) : twists(std::move(tw)) {}

    std::size_t rank() const { return twists.size(); }

    FreeModule dual() const {
        FreeModule d;
        d.twists.reserve(twists.size());
        for (long long a : twists) d.twists.push_back(-a);
        return d;
    }

    FreeModule shifted(long long s) const {
        FreeModule d = *this;
        for (auto& a : d.twists) a += s;
        return d;
    }
};

template <class F>
struct MTerm {
    typename F::Elem c;
    std::size_t comp;
    Monomial m;
};

/// Element of a free module, terms sorted descending in position-over-term
/// order (lower component index wins, then the ring's monomial order).
template <class F>
class ModVec {
public:
    ModVec() = default;
    ModVec(RingPtr<F> ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

    ModVec(RingPtr<F> ring, std::size_t rank, std::vector<MTerm<F>> terms)
        : ring_(std::move(ring)), rank_(rank) {
        terms_ = normalize(*ring_, std::move(terms));
    }

    const RingPtr<F>& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<MTerm<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const MTerm<F>& leading() const {
        if (terms_.empty()) fail(Errc::InvalidArgument, "leading term of zero vector");
        return terms_.front();
    }

    static int compare_terms(const Ring<F>& ring, const MTerm<F>& a, const MTerm<F>& b) {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ring.compare(a.m, b.m);
    }

    ModVec operator-() const {
        ModVec r = *this;
        for (auto& t : r.terms_) t.c = ring_->field().neg(t.c);
        return r;
    }

    ModVec operator+(const ModVec& o) const {
        const F& k = ring_->field();
        ModVec r(ring_, rank_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = compare_terms(*ring_, terms_[i], o.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                auto s = k.add(terms_[i].c, o.terms_[j].c);
                if (!k.is_zero(s)) r.terms_.push_back({std::move(s), terms_[i].comp, terms_[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    ModVec operator-(const ModVec& o) const { return *this + (-o); }

    ModVec times_term(const typename F::Elem& c, const Monomial& m) const {
        const F& k = ring_->field();
        ModVec r(ring_, rank_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({k.mul(t.c, c), t.comp, monomial_mul(t.m, m, ring_->exponent_cap())});
        return r;
    }

    /// Degree assuming homogeneity against the given twists.
    long long degree(const FreeModule& mod) const {
        if (terms_.empty()) return kNegInfDegree;
        return ring_->degree_of(terms_.front().m) + mod.twists[terms_.front().comp];
    }

    bool homogeneous(const FreeModule& mod) const {
        if (terms_.empty()) return true;
        long long d = degree(mod);
        for (const auto& t : terms_)
            if (ring_->degree_of(t.m) + mod.twists[t.comp] != d) return false;
        return true;
    }

    ModVec primitive() const {
        if (is_zero()) return *this;
        if constexpr (std::is_same_v<typename F::Elem, mpq_class>) {
            mpz_class den_lcm = 1, num_gcd = 0;
            for (const auto& t : terms_) {
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
            }
            mpq_class s{den_lcm, num_gcd};
            s.canonicalize();
            if (leading().c < 0) s = -s;
            return times_term(s, Monomial(ring_->nvars()));
        } else {
            return times_term(ring_->field().inv(leading().c), Monomial(ring_->nvars()));
        }
    }

    static std::vector<MTerm<F>> normalize(const Ring<F>& ring, std::vector<MTerm<F>> ts) {
        std::sort(ts.begin(), ts.end(), [&](const MTerm<F>& a, const MTerm<F>& b) {
            return compare_terms(ring, a, b) > 0;
        });
        std::vector<MTerm<F>> out;
        out.reserve(ts.size());
        for (auto& t : ts) {
            if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
                out.back().c = ring.field().add(out.back().c, t.c);
            } else {
                out.push_back(std::move(t));
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const MTerm<F>& t) { return ring.field().is_zero(t.c); }),
                  out.end());
        return out;
    }

private:
    RingPtr<F> ring_;
    std::size_t rank_ = 0;
    std::vector<MTerm<F>> terms_;
};

/// Full normal form in the free module.
template <class F>
ModVec<F> module_normal_form(const ModVec<F>& v, const std::vector<ModVec<F>>& basis) {
    if (basis.empty()) return v;
    const F& k = v.ring()->field();
    ModVec<F> r = v;
    for (;;) {
        bool reduced_any = false;
        for (std::size_t ti = 0; ti < r.terms().size() && !reduced_any; ++ti) {
            const auto& t = r.terms()[ti];
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                const auto& lt = g.leading();
                if (lt.comp != t.comp || !monomial_divides(lt.m, t.m)) continue;
                r = r - g.times_term(k.div(t.c, lt.c), monomial_div(t.m, lt.m));
                reduced_any = true;
                break;
            }
        }
        if (!reduced_any) return r;
    }
}

/// Buchberger over a free module (POT order). Pairs need equal leading
/// components; no coprime criterion (it is not valid for modules).
template <class F>
std::vector<ModVec<F>> module_groebner(const std::vector<ModVec<F>>& gens,
                                       const GroebnerOptions& opts = {}) {
    std::vector<ModVec<F>> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.primitive());
    if (basis.empty()) return basis;
    RingPtr<F> ring = basis.front().ring();

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long long deg;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t idx) {
        const auto& lt = basis[idx].leading();
        for (std::size_t i = 0; i < idx; ++i) {
            const auto& lti = basis[i].leading();
            if (lti.comp != lt.comp) continue;
            Monomial l = monomial_lcm(lti.m, lt.m);
            pairs.push_back({i, idx, l, total_degree(l)});
        }
    };
    for (std::size_t i = 0; i < basis.size(); ++i) add_pairs_for(i);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            const auto& a = pairs[i];
            const auto& b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = i;
                continue;
            }
            int c = ring->compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = i;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const F& k = ring->field();
        const auto& f = basis[p.i];
        const auto& g = basis[p.j];
        ModVec<F> a = f.times_term(k.inv(f.leading().c), monomial_div(p.lcm, f.leading().m));
        ModVec<F> b = g.times_term(k.inv(g.leading().c), monomial_div(p.lcm, g.leading().m));
        ModVec<F> h = module_normal_form(a - b, basis);
        if (!h.is_zero()) {
            if (total_degree(h.leading().m) > opts.degree_cap)
                fail(Errc::DegreeCapExceeded, "module S-pair degree exceeds cap");
            basis.push_back(h.primitive());
            add_pairs_for(basis.size() - 1);
        }
    }
    return basis;
}

/// Minimal homogeneous generating set of the submodule generated by `gens`
/// (ascending-degree sieve; graded rings only).
template <class F>
std::vector<ModVec<F>> minimal_module_generators(std::vector<ModVec<F>> gens,
                                                 const FreeModule& mod,
                                                 const GroebnerOptions& opts = {}) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const ModVec<F>& v) { return v.is_zero(); }),
               gens.end());
    if (gens.empty()) return gens;
    RingPtr<F> ring = gens.front().ring();
    std::sort(gens.begin(), gens.end(), [&](const ModVec<F>& a, const ModVec<F>& b) {
        long long da = a.degree(mod), db = b.degree(mod);
        if (da != db) return da < db;
        return ModVec<F>::compare_terms(*ring, a.leading(), b.leading()) > 0;
    });
    std::vector<ModVec<F>> kept;
    std::vector<ModVec<F>> kept_gb;
    for (const auto& g : gens) {
        if (!kept.empty() && module_normal_form(g, kept_gb).is_zero()) continue;
        kept.push_back(g);
        kept_gb = module_groebner(kept, opts);
    }
    return kept;
}

/// Homogeneous map of graded free modules; entry (i,j) sends source
/// generator j into target coordinate i.
template <class F>
class ModuleMap {
public:
    ModuleMap() = default;

    ModuleMap(RingPtr<F> ring, FreeModule source, FreeModule target,
              std::vector<Polynomial<F>> row_major)
        : ring_(std::move(ring)),
          source_(std::move(source)),
          target_(std::move(target)),
          entries_(std::move(row_major)) {
        if (entries_.size() != source_.rank() * target_.rank())
            fail(Errc::InvalidArgument, "module map entry count mismatch");
    }

    static ModuleMap from_columns(RingPtr<F> ring, const FreeModule& target,
                                  const std::vector<ModVec<F>>& cols) {
        FreeModule source;
        source.twists.reserve(cols.size());
        for (const auto& c : cols) source.twists.push_back(c.degree(target));
        std::vector<Polynomial<F>> entries(target.rank() * cols.size(),
                                           Polynomial<F>::zero(ring));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<std::vector<Term<F>>> rows(target.rank());
            for (const auto& t : cols[j].terms()) rows[t.comp].push_back({t.c, t.m});
            for (std::size_t i = 0; i < target.rank(); ++i)
                if (!rows[i].empty())
                    entries[i * cols.size() + j] = Polynomial<F>(ring, std::move(rows[i]));
        }
        return ModuleMap(std::move(ring), std::move(source), target, std::move(entries));
    }

    const RingPtr<F>& ring() const { return ring_; }
    const FreeModule& source() const { return source_; }
    const FreeModule& target() const { return target_; }

    const Polynomial<F>& entry(std::size_t i, std::size_t j) const {
        return entries_[i * source_.rank() + j];
    }
    Polynomial<F>& entry(std::size_t i, std::size_t j) { return entries_[i * source_.rank() + j]; }

    ModVec<F> column(std::size_t j) const {
        std::vector<MTerm<F>> terms;
        for (std::size_t i = 0; i < target_.rank(); ++i)
            for (const auto& t : entry(i, j).terms()) terms.push_back({t.c, i, t.m});
        return ModVec<F>(ring_, target_.rank(), std::move(terms));
    }

    std::vector<ModVec<F>> columns() const {
        std::vector<ModVec<F>> cols;
        cols.reserve(source_.rank());
        for (std::size_t j = 0; j < source_.rank(); ++j) cols.push_back(column(j));
        return cols;
    }

    bool homogeneous() const {
        for (std::size_t i = 0; i < target_.rank(); ++i)
            for (std::size_t j = 0; j < source_.rank(); ++j) {
                const auto& e = entry(i, j);
                if (e.is_zero()) continue;
                auto d = e.homogeneous_degree();
                if (!d || *d != source_.twists[j] - target_.twists[i]) return false;
            }
        return true;
    }

    ModuleMap transpose() const {
        std::vector<Polynomial<F>> entries(entries_.size(), Polynomial<F>::zero(ring_));
        std::size_t rows = source_.rank(), cols = target_.rank();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) entries[i * cols + j] = entry(j, i);
        return ModuleMap(ring_, target_.dual(), source_.dual(), std::move(entries));
    }

    /// Apply to a vector in the source module.
    ModVec<F> apply(const ModVec<F>& v) const {
        ModVec<F> out(ring_, target_.rank());
        for (const auto& t : v.terms()) {
            for (std::size_t i = 0; i < target_.rank(); ++i) {
                const auto& e = entry(i, t.comp);
                if (e.is_zero()) continue;
                Polynomial<F> prod = e.times_term(t.c, t.m);
                std::vector<MTerm<F>> terms;
                for (const auto& pt : prod.terms()) terms.push_back({pt.c, i, pt.m});
                out = out + ModVec<F>(ring_, target_.rank(), std::move(terms));
            }
        }
        return out;
    }

private:
    RingPtr<F> ring_;
    FreeModule source_, target_;
    std::vector<Polynomial<F>> entries_;  // row-major
};

/// Composition a(b(.)); requires a.source == b.target ranks.
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& a, const ModuleMap<F>& b) {
    if (a.source().rank() != b.target().rank())
        fail(Errc::InvalidArgument, "compose: rank mismatch");
    std::vector<Polynomial<F>> entries(a.target().rank() * b.source().rank(),
                                       Polynomial<F>::zero(a.ring()));
    for (std::size_t i = 0; i < a.target().rank(); ++i)
        for (std::size_t j = 0; j < b.source().rank(); ++j) {
            Polynomial<F> s = Polynomial<F>::zero(a.ring());
            for (std::size_t k = 0; k < a.source().rank(); ++k) s = s + a.entry(i, k) * b.entry(k, j);
            entries[i * b.source().rank() + j] = std::move(s);
        }
    return ModuleMap<F>(a.ring(), b.source(), a.target(), std::move(entries));
}

template <class F>
bool is_zero_map(const ModuleMap<F>& m) {
    for (std::size_t i = 0; i < m.target().rank(); ++i)
        for (std::size_t j = 0; j < m.source().rank(); ++j)
            if (!m.entry(i, j).is_zero()) return false;
    return true;
}

/// Generators of ker(m), via a module Groebner basis of the columns
/// augmented with unit tracking components.
template <class F>
std::vector<ModVec<F>> kernel_generators(const ModuleMap<F>& m, const GroebnerOptions& opts = {}) {
    const RingPtr<F>& ring = m.ring();
    std::size_t nrows = m.target().rank();
    std::size_t ncols = m.source().rank();
    std::vector<ModVec<F>> aug;
    aug.reserve(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
        std::vector<MTerm<F>> terms;
        for (std::size_t i = 0; i < nrows; ++i)
            for (const auto& t : m.entry(i, j).terms()) terms.push_back({t.c, i, t.m});
        terms.push_back({ring->field().one(), nrows + j, Monomial(ring->nvars())});
        aug.emplace_back(ring, nrows + ncols, std::move(terms));
    }
    std::vector<ModVec<F>> gb = module_groebner(aug, opts);
    std::vector<ModVec<F>> kernel;
    for (const auto& v : gb) {
        bool pure = true;
        for (const auto& t : v.terms())
            if (t.comp < nrows) {
                pure = false;
                break;
            }
        if (!pure) continue;
        std::vector<MTerm<F>> terms;
        for (const auto& t : v.terms()) terms.push_back({t.c, t.comp - nrows, t.m});
        kernel.emplace_back(ring, ncols, std::move(terms));
    }
    return kernel;
}

/// Syzygy map: target = m.source, columns generate ker(m). Graded maps only.
template <class F>
ModuleMap<F> syzygies(const ModuleMap<F>& m, const GroebnerOptions& opts = {}) {
    if (!m.ring()->graded()) fail(Errc::ModeMismatch, "syzygies require a graded ring");
    if (!m.homogeneous()) fail(Errc::NotHomogeneous, "syzygies require a homogeneous map");
    std::vector<ModVec<F>> ker = kernel_generators(m, opts);
    ker = minimal_module_generators(std::move(ker), m.source(), opts);
    return ModuleMap<F>::from_columns(m.ring(), m.source(), ker);
}

}  // namespace liaison

#endif
