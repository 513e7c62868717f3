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

#ifndef LIAISON_RING_MAP_HPP
#define LIAISON_RING_MAP_HPP

#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// Move a polynomial into another ring over the same field by sending source
/// variable i to target variable var_map[i]. Every source variable must be
/// mapped; exponents on unmapped target variables stay zero.
template <class F>
Polynomial<F> map_polynomial(const Polynomial<F>& p, const RingPtr<F>& target,
                             const std::vector<std::size_t>& var_map) {
    std::vector<Term<F>> terms;
    terms.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (i >= var_map.size() || var_map[i] >= target->nvars())
                fail(Errc::Internal, "map_polynomial: unmapped variable");
            m.e[var_map[i]] = t.m.e[i];
        }
        terms.push_back({t.c, std::move(m)});
    }
    return Polynomial<F>(target, std::move(terms));
}

/// Name-based variable map from one ring into another; every source variable
/// must exist in the target.
template <class F, class G>
std::vector<std::size_t> variable_map(const Ring<F>& source, const Ring<G>& target) {
    std::vector<std::size_t> vm(source.nvars());
    for (std::size_t i = 0; i < source.nvars(); ++i) {
        auto idx = target.index_of(source.names()[i]);
        if (!idx) fail(Errc::Internal, "variable_map: missing variable " + source.names()[i]);
        vm[i] = *idx;
    }
    return vm;
}

/// Project a polynomial that does not involve the dropped variables into a
/// smaller ring (name-based).
template <class F>
Polynomial<F> project_polynomial(const Polynomial<F>& p, const RingPtr<F>& target) {
    const Ring<F>& src = *p.ring();
    std::vector<std::size_t> vm(src.nvars(), std::size_t(-1));
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        auto idx = target->index_of(src.names()[i]);
        if (idx) vm[i] = *idx;
    }
    std::vector<Term<F>> terms;
    terms.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (vm[i] == std::size_t(-1))
                fail(Errc::Internal, "project_polynomial: dropped variable present");
            m.e[vm[i]] = t.m.e[i];
        }
        terms.push_back({t.c, std::move(m)});
    }
    return Polynomial<F>(target, std::move(terms));
}

}  // namespace liaison

#endif
