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

#ifndef LIAISON_RESOLUTION_HPP
#define LIAISON_RESOLUTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "liaison/module.hpp"

namespace liaison {

/// Minimal graded free resolution 0 <- M <- F_0 <- F_1 <- ... ; maps[k] is
/// F_{k+1} -> F_k. Minimality: no differential entry is a nonzero constant.
template <class F>
struct Resolution {
    FreeModule f0;
    std::vector<ModuleMap<F>> maps;

    std::size_t length() const { return maps.size(); }

    const FreeModule& module_at(std::size_t i) const {
        return i == 0 ? f0 : maps[i - 1].source();
    }
};

/// Graded Betti numbers beta_{i,j} (homological index i, internal degree j).
struct BettiTable {
    std::map<std::pair<std::size_t, long long>, long long> entries;

    long long beta(std::size_t i, long long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    std::size_t projective_dimension() const {
        std::size_t pd = 0;
        for (const auto& [k, v] : entries)
            if (v != 0) pd = std::max(pd, k.first);
        return pd;
    }

    bool empty() const { return entries.empty(); }
};

namespace detail {

/// Cancel nonzero constant entries of a presentation matrix by exact
/// row/column elimination; deterministic smallest-(i,j) pivot. The cokernel
/// is unchanged; afterwards the target generators are minimal.
template <class F>
void minimalize_presentation(RingPtr<F> ring, FreeModule& target,
                             std::vector<std::vector<Polynomial<F>>>& cols,
                             std::vector<long long>& coldegs) {
    const F& k = ring->field();
    for (;;) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = 0; i < target.rank() && !found; ++i)
            for (std::size_t j = 0; j < cols.size() && !found; ++j) {
                const auto& e = cols[j][i];
                if (!e.is_zero() && e.is_constant()) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) return;

        typename F::Elem u = cols[pj][pi].leading_coeff();
        // column operations: clear row pi outside the pivot column
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == pj || cols[j][pi].is_zero()) continue;
            Polynomial<F> lambda = cols[j][pi].scale(k.inv(u));
            for (std::size_t i = 0; i < target.rank(); ++i)
                cols[j][i] = cols[j][i] - lambda * cols[pj][i];
        }
        // row operations: clear the pivot column outside row pi
        for (std::size_t i = 0; i < target.rank(); ++i) {
            if (i == pi || cols[pj][i].is_zero()) continue;
            Polynomial<F> lambda = cols[pj][i].scale(k.inv(u));
            for (std::size_t j = 0; j < cols.size(); ++j)
                cols[j][i] = cols[j][i] - lambda * cols[j][pi];
        }
        // drop generator pi of the target and column pj
        for (std::size_t j = 0; j < cols.size(); ++j)
            cols[j].erase(cols[j].begin() + static_cast<std::ptrdiff_t>(pi));
        target.twists.erase(target.twists.begin() + static_cast<std::ptrdiff_t>(pi));
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pj));
        coldegs.erase(coldegs.begin() + static_cast<std::ptrdiff_t>(pj));
    }
}

}  // namespace detail

/// Minimal free resolution of coker(pres). Each differential's columns are a
/// minimal generating set of the kernel of the previous one, so the result
/// is minimal by construction.
template <class F>
Resolution<F> resolve_cokernel(const ModuleMap<F>& pres, const GroebnerOptions& opts = {}) {
    const RingPtr<F>& ring = pres.ring();
    if (!ring->graded()) fail(Errc::ModeMismatch, "resolutions require a graded ring");
    if (!pres.homogeneous()) fail(Errc::NotHomogeneous, "presentation must be homogeneous");

    // column-major working copy for constant cancellation
    FreeModule target = pres.target();
    std::vector<std::vector<Polynomial<F>>> cols(pres.source().rank());
    std::vector<long long> coldegs = pres.source().twists;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cols[j].reserve(target.rank());
        for (std::size_t i = 0; i < target.rank(); ++i) cols[j].push_back(pres.entry(i, j));
    }
    detail::minimalize_presentation(ring, target, cols, coldegs);

    Resolution<F> res;
    res.f0 = target;
    if (target.rank() == 0) return res;  // zero module

    std::vector<ModVec<F>> current;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<MTerm<F>> terms;
        for (std::size_t i = 0; i < target.rank(); ++i)
            for (const auto& t : cols[j][i].terms()) terms.push_back({t.c, i, t.m});
        current.emplace_back(ring, target.rank(), std::move(terms));
    }
    current = minimal_module_generators(std::move(current), target, opts);

    FreeModule at = target;
    while (!current.empty()) {
        ModuleMap<F> step = ModuleMap<F>::from_columns(ring, at, current);
        res.maps.push_back(step);
        if (res.maps.size() > ring->nvars() + 1)
            fail(Errc::Internal, "resolution exceeds the Hilbert syzygy bound");
        std::vector<ModVec<F>> ker = kernel_generators(step, opts);
        ker = minimal_module_generators(std::move(ker), step.source(), opts);
        at = step.source();
        current = std::move(ker);
    }
    return res;
}

/// Minimal free resolution of R/I.
template <class F>
Resolution<F> minimal_free_resolution(const Ideal<F>& I, const GroebnerOptions& opts = {}) {
    const RingPtr<F>& ring = I.ring();
    if (!ring->graded()) fail(Errc::ModeMismatch, "resolutions require a graded ring");
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) fail(Errc::NotHomogeneous, "ideal must be homogeneous");
    if (I.is_unit()) fail(Errc::UnitIdeal, "cannot resolve R/(1)");

    FreeModule target(std::vector<long long>{0});
    std::vector<long long> coldegs;
    std::vector<Polynomial<F>> row;
    for (const auto& g : I.generators()) {
        row.push_back(g);
        coldegs.push_back(g.degree());
    }
    FreeModule source(std::move(coldegs));
    ModuleMap<F> pres(ring, source, target, std::move(row));
    return resolve_cokernel(pres, opts);
}

template <class F>
BettiTable betti_table(const Resolution<F>& res) {
    BettiTable bt;
    for (long long a : res.f0.twists) bt.entries[{0, a}] += 1;
    for (std::size_t i = 0; i < res.maps.size(); ++i)
        for (long long a : res.maps[i].source().twists) bt.entries[{i + 1, a}] += 1;
    return bt;
}

/// Castelnuovo-Mumford regularity: max(j - i); -inf sentinel for the zero
/// module.
inline long long regularity(const BettiTable& bt) {
    long long r = kNegInfDegree;
    for (const auto& [k, v] : bt.entries)
        if (v != 0) r = std::max(r, k.second - static_cast<long long>(k.first));
    return r;
}

template <class F>
long long regularity(const Resolution<F>& res) {
    return regularity(betti_table(res));
}

/// Regularity of the module presented by `pres` (resolve the cokernel).
template <class F>
long long module_regularity(const ModuleMap<F>& pres, const GroebnerOptions& opts = {}) {
    return regularity(resolve_cokernel(pres, opts));
}

/// Presentation of Ext^r(R/I, R) twisted by R(-nvars), i.e. by R(-n-1) on
/// P^n: the canonical module of R/I when depth allows. Computed from the
/// dualized minimal resolution.
template <class F>
ModuleMap<F> canonical_module(const Ideal<F>& I, std::size_t r, const GroebnerOptions& opts = {}) {
    Resolution<F> res = minimal_free_resolution(I, opts);
    std::size_t L = res.length();
    if (r < 1 || r > L)
        fail(Errc::ExtOutOfRange, "Ext index " + std::to_string(r) + " outside resolution length " +
                                      std::to_string(L));
    long long shift = static_cast<long long>(I.ring()->nvars());

    // delta_k = transpose(maps[k-1]) : F_{k-1}* -> F_k*
    ModuleMap<F> delta_r = res.maps[r - 1].transpose();

    if (r == L) {
        // Ext^L = coker(delta_L): presentation is delta_L itself, twisted.
        return ModuleMap<F>(I.ring(), delta_r.source().shifted(shift),
                            delta_r.target().shifted(shift),
                            [&] {
                                std::vector<Polynomial<F>> e;
                                for (std::size_t i = 0; i < delta_r.target().rank(); ++i)
                                    for (std::size_t j = 0; j < delta_r.source().rank(); ++j)
                                        e.push_back(delta_r.entry(i, j));
                                return e;
                            }());
    }

    // kernel of delta_{r+1}, minimally generated
    ModuleMap<F> delta_next = res.maps[r].transpose();
    std::vector<ModVec<F>> kappa = kernel_generators(delta_next, opts);
    kappa = minimal_module_generators(std::move(kappa), delta_next.source(), opts);
    ModuleMap<F> kappa_map = ModuleMap<F>::from_columns(I.ring(), delta_next.source(), kappa);

    // relations: syzygies of [kappa | delta_r], projected to the kappa block
    std::vector<ModVec<F>> combined = kappa_map.columns();
    for (const auto& c : delta_r.columns()) combined.push_back(c);
    ModuleMap<F> combined_map =
        ModuleMap<F>::from_columns(I.ring(), delta_next.source(), combined);
    std::vector<ModVec<F>> syz = kernel_generators(combined_map, opts);
    std::size_t nk = kappa.size();
    std::vector<ModVec<F>> rels;
    for (const auto& s : syz) {
        std::vector<MTerm<F>> terms;
        for (const auto& t : s.terms())
            if (t.comp < nk) terms.push_back(t);
        ModVec<F> proj(I.ring(), nk, std::move(terms));
        if (!proj.is_zero()) rels.push_back(std::move(proj));
    }
    FreeModule ext_target(kappa_map.source().twists);
    rels = minimal_module_generators(std::move(rels), ext_target, opts);
    ModuleMap<F> pres = ModuleMap<F>::from_columns(I.ring(), ext_target, rels);
    return ModuleMap<F>(I.ring(), pres.source().shifted(shift), pres.target().shifted(shift),
                        [&] {
                            std::vector<Polynomial<F>> e;
                            for (std::size_t i = 0; i < pres.target().rank(); ++i)
                                for (std::size_t j = 0; j < pres.source().rank(); ++j)
                                    e.push_back(pres.entry(i, j));
                            return e;
                        }());
}

}  // namespace liaison

#endif
