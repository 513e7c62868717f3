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

#ifndef LIAISON_LINKAGE_HPP
#define LIAISON_LINKAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liaison/resolution.hpp"
#include "liaison/ring_map.hpp"
#include "liaison/rng.hpp"

namespace liaison {

enum class LinkMode { Symbolic, GradedRandom };

/// t x s matrix M with alpha = (f_1..f_t) . M. Symbolic mode: entries are
/// fresh affine variables U_ij. Graded-random mode: top r x r identity block,
/// below it dense random forms of degree d_j - d_i.
template <class F>
struct LinkMatrix {
    LinkMode mode = LinkMode::GradedRandom;
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial<F>> entries;  // row-major, in the result ring

    const Polynomial<F>& entry(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
};

struct LinkGenericity {
    bool alpha_is_regular_sequence = false;
    long long codim_J = 0;
    long long codim_Z = 0;
    unsigned resample_count = 0;
};

template <class F>
struct LinkageResult {
    std::vector<Polynomial<F>> alpha;
    Ideal<F> J;
    Ideal<F> Z;
    LinkMatrix<F> matrix;
    std::uint64_t seed = 0;
    LinkGenericity genericity;
    bool degenerate = false;  // J = (1)
};

struct LinkageOptions {
    std::size_t symbolic_cap = 6;  // maximum t*s for symbolic mode
    std::int64_t coeff_bound = 100;
    unsigned max_resamples = 8;
    GroebnerOptions groebner;
};

namespace detail {

/// All monomials of total degree d, in descending ring order.
template <class F>
std::vector<Monomial> monomials_of_degree(const RingPtr<F>& ring, long long d) {
    std::vector<Monomial> out;
    Monomial m(ring->nvars());
    auto rec = [&](auto&& self, std::size_t var, long long rem) -> void {
        if (var + 1 == ring->nvars()) {
            m.e[var] = static_cast<Exponent>(rem);
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (long long e = rem; e >= 0; --e) {
            m.e[var] = static_cast<Exponent>(e);
            self(self, var + 1, rem - e);
        }
        m.e[var] = 0;
    };
    if (d < 0) return out;
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
    return out;
}

/// Dense form of degree d with every coefficient sampled from {-B..B}\{0}.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, long long d, Rng& rng, std::int64_t bound) {
    std::vector<Term<F>> terms;
    for (const auto& m : monomials_of_degree(ring, d))
        terms.push_back({ring->field().from_int(static_cast<long>(rng.nonzero(bound))), m});
    return Polynomial<F>(ring, std::move(terms));
}

/// Generators sorted by descending degree (deterministic tie-break).
template <class F>
std::vector<Polynomial<F>> descending_generators(const Ideal<F>& I) {
    std::vector<Polynomial<F>> gens = I.generators();
    std::sort(gens.begin(), gens.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.ring()->compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return gens;
}

}  // namespace detail

/// s-generic residual intersection in the extended affine ring
/// R' = R[U_ij]: alpha = (f_1..f_t) . (U_ij), J = [alpha : I R'], Z = J + I R'.
template <class F>
LinkageResult<F> symbolic_residual(const Ideal<F>& I, std::size_t s,
                                   const LinkageOptions& opts = {}) {
    std::vector<Polynomial<F>> gens = detail::descending_generators(I);
    std::size_t t = gens.size();
    if (t == 0 || s == 0) fail(Errc::InvalidArgument, "symbolic residual needs t >= 1, s >= 1");
    if (t * s > opts.symbolic_cap)
        fail(Errc::SizeCapExceeded, "symbolic matrix size " + std::to_string(t) + "x" +
                                        std::to_string(s) + " exceeds cap " +
                                        std::to_string(opts.symbolic_cap));

    std::vector<std::string> names = I.ring()->names();
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            names.push_back("U" + std::to_string(i) + "_" + std::to_string(j));
    RingPtr<F> ext = Ring<F>::make(I.ring()->field(), std::move(names), RingMode::Affine,
                                   MonomialOrder::grevlex(), {}, I.ring()->exponent_cap());

    auto vm = variable_map(*I.ring(), *ext);
    std::vector<Polynomial<F>> egens;
    egens.reserve(t);
    for (const auto& g : gens) egens.push_back(map_polynomial(g, ext, vm));

    LinkMatrix<F> M;
    M.mode = LinkMode::Symbolic;
    M.rows = t;
    M.cols = s;
    std::size_t base = I.ring()->nvars();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < s; ++j)
            M.entries.push_back(Polynomial<F>::variable(ext, base + i * s + j));

    std::vector<Polynomial<F>> alpha;
    for (std::size_t j = 0; j < s; ++j) {
        Polynomial<F> a = Polynomial<F>::zero(ext);
        for (std::size_t i = 0; i < t; ++i) a = a + egens[i] * M.entry(i, j);
        alpha.push_back(std::move(a));
    }

    Ideal<F> IR(ext, egens);
    Ideal<F> A(ext, alpha);
    Ideal<F> J = colon(A, IR, opts.groebner);
    Ideal<F> Z = J.is_unit() ? IR : ideal_sum(J, IR);

    LinkGenericity gen;
    gen.alpha_is_regular_sequence =
        A.is_proper() && codimension(A) == s;
    gen.codim_J = J.is_proper() ? static_cast<long long>(codimension(J)) : 0;
    gen.codim_Z = Z.is_proper() ? static_cast<long long>(codimension(Z)) : 0;
    return LinkageResult<F>{std::move(alpha), std::move(J), std::move(Z),
                            std::move(M),     0,            gen,
                            false};
}

/// Graded generic link: alpha_j = f_j + sum_{i>r} a_ij f_i with a_ij dense
/// random forms of degree d_j - d_i; J = [alpha : I], Z = I + J. Genericity
/// (codim alpha = r; codim J = r; codim Z = r+1) is verified a posteriori,
/// resampling with a derived seed on failure.
template <class F>
LinkageResult<F> graded_generic_link(const Ideal<F>& I, std::uint64_t seed,
                                     const LinkageOptions& opts = {}) {
    const RingPtr<F>& ring = I.ring();
    if (!ring->graded()) fail(Errc::ModeMismatch, "graded link requires a graded ring");
    if (!I.homogeneous()) fail(Errc::NotHomogeneous, "graded link requires homogeneous generators");
    if (!I.is_proper()) fail(Errc::UnitIdeal, "cannot link the unit ideal");
    if (I.is_zero()) fail(Errc::InvalidArgument, "cannot link the zero ideal");

    std::vector<Polynomial<F>> gens = detail::descending_generators(I);
    std::size_t t = gens.size();
    std::size_t r = codimension(I);
    if (r > t) fail(Errc::Internal, "codimension exceeds generator count");

    std::uint64_t cur = seed;
    for (unsigned attempt = 0;; ++attempt) {
        Rng rng(cur);
        LinkMatrix<F> M;
        M.mode = LinkMode::GradedRandom;
        M.rows = t;
        M.cols = r;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (i < r) {
                    M.entries.push_back(i == j ? Polynomial<F>::constant(ring, ring->field().one())
                                               : Polynomial<F>::zero(ring));
                } else {
                    long long d = gens[j].degree() - gens[i].degree();
                    M.entries.push_back(d < 0 ? Polynomial<F>::zero(ring)
                                              : detail::random_form(ring, d, rng,
                                                                    opts.coeff_bound));
                }
            }

        std::vector<Polynomial<F>> alpha;
        for (std::size_t j = 0; j < r; ++j) {
            Polynomial<F> a = gens[j];
            for (std::size_t i = r; i < t; ++i) a = a + gens[i] * M.entry(i, j);
            alpha.push_back(std::move(a));
        }

        Ideal<F> A(ring, alpha);
        bool reg_seq = A.is_proper() && codimension(A) == r;
        if (reg_seq) {
            Ideal<F> J = colon(A, I, opts.groebner);
            if (J.is_unit()) {
                // degenerate link (I is itself generated by alpha)
                LinkGenericity gen;
                gen.alpha_is_regular_sequence = true;
                gen.codim_J = 0;
                gen.codim_Z = static_cast<long long>(r);
                gen.resample_count = attempt;
                return LinkageResult<F>{std::move(alpha), std::move(J), I,   std::move(M),
                                        cur,              gen,          true};
            }
            Ideal<F> Z = ideal_sum(I, J);
            std::size_t cj = codimension(J);
            std::size_t cz = Z.is_proper() ? codimension(Z) : ring->nvars();
            if (cj == r && cz == r + 1) {
                LinkGenericity gen;
                gen.alpha_is_regular_sequence = true;
                gen.codim_J = static_cast<long long>(cj);
                gen.codim_Z = static_cast<long long>(cz);
                gen.resample_count = attempt;
                return LinkageResult<F>{std::move(alpha), std::move(J), std::move(Z),
                                        std::move(M),     cur,          gen,
                                        false};
            }
        }
        if (attempt + 1 >= opts.max_resamples)
            fail(Errc::GenericityFailure,
                 "genericity checks failed after " + std::to_string(opts.max_resamples) +
                     " samples (seed " + std::to_string(seed) + ")");
        cur = derive_seed(cur);
    }
}

template <class F>
const Ideal<F>& intersection_divisor(const LinkageResult<F>& result) {
    return result.Z;
}

/// Maximum degree among minimal generators, read off beta_{1,j} of the
/// minimal resolution of R/J; 0 for the unit ideal by convention.
template <class F>
long long max_generator_degree(const Ideal<F>& J, const GroebnerOptions& opts = {}) {
    if (J.is_unit() || J.is_zero()) return 0;
    Resolution<F> res = minimal_free_resolution(J, opts);
    long long d = 0;
    if (!res.maps.empty())
        for (long long a : res.maps[0].source().twists) d = std::max(d, a);
    return d;
}

}  // namespace liaison

#endif
