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

#include <catch2/catch_amalgamated.hpp>

#include "liaison/ideal.hpp"
#include "liaison/parse.hpp"
#include "liaison/rng.hpp"

using namespace liaison;
using QQ = RationalField;

namespace {

RingPtr<QQ> ring2() { return Ring<QQ>::make(QQ{}, {"x", "y"}); }
RingPtr<QQ> ring3() { return Ring<QQ>::make(QQ{}, {"x", "y", "z"}); }

Ideal<QQ> ideal_of(const RingPtr<QQ>& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial<QQ>> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial<QQ>(g, R));
    return Ideal<QQ>(R, std::move(ps));
}

Monomial random_monomial(Rng& rng, std::size_t nvars, Exponent max_exp) {
    Monomial m(nvars);
    for (auto& e : m.e) e = static_cast<Exponent>(rng.below(max_exp + 1));
    return m;
}

// brute-force: is J contained in the radical of I, for monomial ideals,
// testing generator powers up to exponent 6
bool radical_membership_oracle(const Ideal<QQ>& I, const Ideal<QQ>& J) {
    for (const auto& g : J.generators()) {
        bool some_power = false;
        Polynomial<QQ> p = g;
        for (int e = 1; e <= 6; ++e) {
            if (I.contains(p)) {
                some_power = true;
                break;
            }
            p = p * g;
        }
        if (!some_power) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("sum and product") {
    auto R = ring3();
    CHECK(ideal_sum(ideal_of(R, {"x"}), ideal_of(R, {"y"})) == ideal_of(R, {"x", "y"}));
    auto prod = ideal_product(ideal_of(R, {"x"}), ideal_of(R, {"x^2", "y^2", "z^2"}));
    CHECK(prod == ideal_of(R, {"x^3", "x*y^2", "x*z^2"}));
    auto I = ideal_of(R, {"x^2 - y*z"});
    CHECK(ideal_sum(I, Ideal<QQ>::zero(R)) == I);
}

TEST_CASE("intersection") {
    auto R = ring3();
    CHECK(intersection(ideal_of(R, {"x"}), ideal_of(R, {"y"})) == ideal_of(R, {"x*y"}));
    auto I = ideal_of(R, {"x^2 - y*z", "x*y"});
    CHECK(intersection(I, I) == I);
    CHECK(intersection(ideal_of(R, {"x"}), ideal_of(R, {"x", "y"})) == ideal_of(R, {"x"}));
}

TEST_CASE("colon") {
    auto R = ring2();
    CHECK(colon(ideal_of(R, {"x^2", "x*y"}), ideal_of(R, {"x"})) == ideal_of(R, {"x", "y"}));
    auto I = ideal_of(R, {"x^2 - y^2", "x*y"});
    CHECK(colon(I, Ideal<QQ>::unit(R)) == I);
    CHECK(colon(ideal_of(R, {"x*y"}), ideal_of(R, {"x"})) == ideal_of(R, {"y"}));
}

TEST_CASE("saturation") {
    auto R = ring2();
    auto m = ideal_of(R, {"x", "y"});
    CHECK(saturation(ideal_of(R, {"x^2", "x*y"}), m) == ideal_of(R, {"x"}));
    auto s = saturation(ideal_of(R, {"x^2", "x*y"}), m);
    CHECK(saturation(s, m) == s);
    CHECK(saturation(ideal_of(R, {"x"}), ideal_of(R, {"y"})) == ideal_of(R, {"x"}));
}

TEST_CASE("eliminate") {
    auto R = Ring<QQ>::make(QQ{}, {"t", "x", "y"});
    auto I = ideal_of(R, {"t*x - 1", "y"});
    auto E = eliminate(I, {0});
    REQUIRE(E.ring()->nvars() == 2);
    auto Rxy = E.ring();
    CHECK(E == Ideal<QQ>(Rxy, {parse_polynomial<QQ>("y", Rxy)}));

    auto I2 = ideal_of(R, {"t - x"});
    CHECK(eliminate(I2, {0}).is_zero());

    auto I3 = ideal_of(R, {"t*x - 1", "y"});
    CHECK(eliminate(I3, {}) == I3);
}

TEST_CASE("dimension and codimension") {
    auto R = ring3();
    CHECK(krull_dimension(ideal_of(R, {"x"})) == 2);
    CHECK(codimension(ideal_of(R, {"x"})) == 1);
    CHECK(krull_dimension(ideal_of(R, {"x", "y", "z"})) == 0);
    CHECK_THROWS_AS(krull_dimension(Ideal<QQ>::unit(R)), Error);

    auto R4 = Ring<QQ>::make(QQ{}, {"x0", "x1", "x2", "x3"});
    auto tc = Ideal<QQ>(R4, {parse_polynomial<QQ>("x0*x2 - x1^2", R4),
                             parse_polynomial<QQ>("x1*x3 - x2^2", R4),
                             parse_polynomial<QQ>("x0*x3 - x1*x2", R4)});
    CHECK(codimension(tc) == 2);
}

TEST_CASE("hilbert series") {
    auto R3 = ring3();
    CHECK(hilbert_series(Ideal<QQ>::zero(R3)).numerator == std::vector<long long>{1});
    CHECK(hilbert_series(ideal_of(R3, {"x^2 + y*z"})).numerator ==
          std::vector<long long>{1, 0, -1});

    auto R4 = Ring<QQ>::make(QQ{}, {"x0", "x1", "x2", "x3"});
    auto tc = Ideal<QQ>(R4, {parse_polynomial<QQ>("x0*x2 - x1^2", R4),
                             parse_polynomial<QQ>("x1*x3 - x2^2", R4),
                             parse_polynomial<QQ>("x0*x3 - x1*x2", R4)});
    CHECK(hilbert_series(tc).numerator == std::vector<long long>{1, 0, -3, 2});

    auto R1 = ring2();
    CHECK_THROWS_AS(hilbert_series(ideal_of(R1, {"x^2 + y"})), Error);
}

TEST_CASE("colon containment and radical membership") {
    auto R = ring3();
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial<QQ>> gi, gj;
        for (std::size_t i = 0; i < 1 + rng.below(3); ++i)
            gi.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), random_monomial(rng, 3, 2)));
        for (std::size_t i = 0; i < 1 + rng.below(2); ++i)
            gj.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), random_monomial(rng, 3, 2)));
        Ideal<QQ> I(R, gi), J(R, gj);
        if (J.is_zero()) continue;
        auto Q = colon(I, J);
        CHECK(Q.contains(I));
        if (!I.is_unit())
            CHECK((saturation(I, J).is_unit()) == radical_membership_oracle(I, J));
    }
}

TEST_CASE("intersection and sum containments") {
    auto R = ring3();
    Rng rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial<QQ>> gi, gj;
        for (std::size_t i = 0; i < 1 + rng.below(2); ++i)
            gi.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), random_monomial(rng, 3, 2)));
        for (std::size_t i = 0; i < 1 + rng.below(2); ++i)
            gj.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), random_monomial(rng, 3, 2)));
        Ideal<QQ> I(R, gi), J(R, gj);
        auto C = intersection(I, J);
        CHECK(I.contains(C));
        CHECK(J.contains(C));
        auto S = ideal_sum(I, J);
        CHECK(S.contains(I));
        CHECK(S.contains(J));
    }
}

TEST_CASE("hilbert series matches standard monomial counts") {
    auto R = ring3();
    Rng rng(611);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial<QQ>> gens;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial m = random_monomial(rng, 3, 3);
            if (trial % 2 == 0) {
                gens.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), m));
            } else {
                // homogeneous binomial: m - m' with the same degree
                Monomial m2 = random_monomial(rng, 3, 3);
                while (total_degree(m2) != total_degree(m)) m2 = random_monomial(rng, 3, 3);
                auto p = Polynomial<QQ>::monomial(R, mpq_class(1), m) +
                         Polynomial<QQ>::monomial(R, mpq_class(-1), m2);
                if (!p.is_zero()) gens.push_back(p);
            }
        }
        Ideal<QQ> I(R, gens);
        if (I.is_unit()) continue;
        auto hs = hilbert_series(I);
        auto lts = leading_term_ideal(I.groebner());
        for (long long d = 0; d <= 10; ++d) {
            // count degree-d monomials outside LT(I)
            long long count = 0;
            for (Exponent a = 0; a <= d; ++a)
                for (Exponent b = 0; a + b <= d; ++b) {
                    Monomial m(3);
                    m.e = {a, b, static_cast<Exponent>(d - a - b)};
                    bool in = false;
                    for (const auto& l : lts)
                        if (monomial_divides(l, m)) in = true;
                    if (!in) ++count;
                }
            CHECK(hs.value_at(d) == count);
        }
    }
}

TEST_CASE("dimension complements codimension") {
    auto R = ring3();
    Rng rng(313);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial<QQ>> gens;
        for (std::size_t i = 0; i < 1 + rng.below(3); ++i)
            gens.push_back(Polynomial<QQ>::monomial(R, mpq_class(1), random_monomial(rng, 3, 2)));
        Ideal<QQ> I(R, gens);
        if (I.is_unit()) continue;
        CHECK(krull_dimension(I) + codimension(I) == 3);
    }
}

TEST_CASE("minimal generators") {
    auto R = ring3();
    auto mg = minimal_generators(ideal_of(R, {"x", "x^2", "x*y", "y^2"}));
    CHECK(mg.size() == 2);  // x and y^2
    auto mg2 = minimal_generators(ideal_of(R, {"x^2", "y^2"}));
    CHECK(mg2.size() == 2);
}
