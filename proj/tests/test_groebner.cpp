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

#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "liaison/groebner.hpp"
#include "liaison/parse.hpp"
#include "liaison/rng.hpp"

using namespace liaison;
using QQ = RationalField;

namespace {

RingPtr<QQ> ring3() { return Ring<QQ>::make(QQ{}, {"x", "y", "z"}); }

Polynomial<QQ> random_poly(Rng& rng, const RingPtr<QQ>& R, std::size_t nterms, Exponent max_exp) {
    std::vector<Term<QQ>> ts;
    for (std::size_t i = 0; i < nterms; ++i) {
        Monomial m(R->nvars());
        for (auto& e : m.e) e = static_cast<Exponent>(rng.below(max_exp + 1));
        ts.push_back({mpq_class(static_cast<long>(rng.nonzero(4))), std::move(m)});
    }
    return Polynomial<QQ>(R, std::move(ts));
}

Monomial random_monomial(Rng& rng, std::size_t nvars, Exponent max_exp) {
    Monomial m(nvars);
    for (auto& e : m.e) e = static_cast<Exponent>(rng.below(max_exp + 1));
    return m;
}

}  // namespace

TEST_CASE("normal form examples") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };
    CHECK(normal_form(P("x^2*y"), {P("x^2")}).is_zero());
    CHECK(normal_form(P("x*y + y^2"), {P("x")}) == P("y^2"));
    auto f = P("x^3 - 2*y + 1");
    CHECK(normal_form(f, std::vector<Polynomial<QQ>>{}) == f);
}

TEST_CASE("buchberger examples") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };

    auto gb1 = reduced_groebner<QQ>({P("x^2"), P("x*y")});
    REQUIRE(gb1.elements.size() == 2);
    CHECK(gb1.elements[0] == P("x*y"));
    CHECK(gb1.elements[1] == P("x^2"));

    auto gb2 = reduced_groebner<QQ>({P("x + y"), P("x - y")});
    REQUIRE(gb2.elements.size() == 2);
    CHECK(gb2.elements[0] == P("y"));
    CHECK(gb2.elements[1] == P("x"));

    CHECK(reduced_groebner<QQ>({}).elements.empty());
    CHECK(reduced_groebner<QQ>({Polynomial<QQ>::zero(R)}).elements.empty());
}

TEST_CASE("reduce_basis examples") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };

    GroebnerBasis<QQ> gb;
    gb.elements = {P("x"), P("x + y")};
    auto red = reduce_basis(gb);
    REQUIRE(red.elements.size() == 2);
    CHECK(red.elements[0] == P("y"));
    CHECK(red.elements[1] == P("x"));
    // idempotence
    auto red2 = reduce_basis(red);
    CHECK(red2.elements == red.elements);

    GroebnerBasis<QQ> gb2;
    gb2.elements = {P("2*x")};
    CHECK(reduce_basis(gb2).elements == std::vector<Polynomial<QQ>>{P("x")});
}

TEST_CASE("leading term ideal examples") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };
    auto lt1 = leading_term_ideal(reduced_groebner<QQ>({P("x^2 - y")}));
    REQUIRE(lt1.size() == 1);
    CHECK(total_degree(lt1[0]) == 2);
    CHECK(lt1[0].e[0] == 2);

    CHECK(leading_term_ideal(reduced_groebner<QQ>({})).empty());

    auto lt2 = leading_term_ideal(reduced_groebner<QQ>({P("x + y"), P("y^2")}));
    CHECK(lt2.size() == 2);
}

TEST_CASE("reduced GB uniqueness under generator permutation") {
    auto R = ring3();
    Rng rng(4242);
    int nontrivial = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial<QQ>> gens;
        std::size_t n = 2 + rng.below(2);
        for (std::size_t i = 0; i < n; ++i) gens.push_back(random_poly(rng, R, 3, 2));
        GroebnerBasis<QQ> a;
        try {
            a = reduced_groebner(gens, GroebnerOptions{20});
        } catch (const Error&) {
            continue;  // rare degree-cap blowup; uniqueness is vacuous
        }
        std::vector<Polynomial<QQ>> shuffled = gens;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        auto b = reduced_groebner(shuffled, GroebnerOptions{20});
        REQUIRE(a.elements.size() == b.elements.size());
        for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
        if (a.elements.size() > n) ++nontrivial;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("membership vs divisibility oracle on monomial ideals") {
    auto R = ring3();
    Rng rng(1717);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial<QQ>> gens;
        std::vector<Monomial> monos;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial m = random_monomial(rng, 3, 3);
            monos.push_back(m);
            gens.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), m));
        }
        auto gb = reduced_groebner(gens);
        Monomial probe = random_monomial(rng, 3, 4);
        bool oracle = false;
        for (const auto& m : monos)
            if (monomial_divides(m, probe)) oracle = true;
        bool member =
            normal_form(Polynomial<QQ>::monomial(R, mpq_class(1), probe), gb.elements).is_zero();
        CHECK(member == oracle);
    }
}

TEST_CASE("normal form is linear for a fixed reduced GB") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };
    auto gb = reduced_groebner<QQ>({P("x^2 - y*z"), P("y^3 - z^3"), P("x*y - z^2")});
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_poly(rng, R, 3, 3);
        auto g = random_poly(rng, R, 3, 3);
        mpq_class a(static_cast<long>(rng.nonzero(7)));
        mpq_class b(static_cast<long>(rng.nonzero(7)));
        auto lhs = normal_form(f.scale(a) + g.scale(b), gb.elements);
        auto rhs = normal_form(f, gb.elements).scale(a) + normal_form(g, gb.elements).scale(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("buchberger postcondition: all S-polynomials reduce to zero") {
    auto R = ring3();
    Rng rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial<QQ>> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(random_poly(rng, R, 3, 2));
        try {
            auto gb = reduced_groebner(gens, GroebnerOptions{20});
            CHECK(all_s_polynomials_reduce(gb));
        } catch (const Error&) {
        }
    }
}

TEST_CASE("degree cap aborts runaway computations") {
    auto R = ring3();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(s, R); };
    bool capped = false;
    try {
        reduced_groebner<QQ>({P("x^5 - y*z^4"), P("x*y^4 - z^5"), P("x^4*z - y^5")},
                             GroebnerOptions{6});
    } catch (const Error& e) {
        capped = e.code() == Errc::DegreeCapExceeded;
    }
    CHECK(capped);
}
