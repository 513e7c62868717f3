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

#include "liaison/linkage.hpp"
#include "liaison/parse.hpp"

using namespace liaison;
using QQ = RationalField;

namespace {

Ideal<QQ> ideal_of(const RingPtr<QQ>& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial<QQ>> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial<QQ>(g, R));
    return Ideal<QQ>(R, std::move(ps));
}

RingPtr<QQ> ring4() { return Ring<QQ>::make(QQ{}, {"x0", "x1", "x2", "x3"}); }

Ideal<QQ> twisted_cubic(const RingPtr<QQ>& R) {
    return ideal_of(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
}

long long sigma_of(const Ideal<QQ>& I) {
    auto gens = detail::descending_generators(I);
    std::size_t r = codimension(I);
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i) s += gens[i].degree();
    return s - static_cast<long long>(r);
}

}  // namespace

TEST_CASE("symbolic residual: (x, y) with s = 2 gives (alpha, det M)") {
    auto R = Ring<QQ>::make(QQ{}, {"x", "y"});
    auto res = symbolic_residual(ideal_of(R, {"x", "y"}), 2);
    REQUIRE(res.alpha.size() == 2);
    REQUIRE(res.matrix.rows == 2);
    REQUIRE(res.matrix.cols == 2);
    auto ext = res.J.ring();
    REQUIRE(ext->nvars() == 6);

    // J = (alpha_1, alpha_2, det M)
    auto det = parse_polynomial<QQ>("U1_1*U2_2 - U1_2*U2_1", ext);
    Ideal<QQ> expected(ext, {res.alpha[0], res.alpha[1], det});
    CHECK(res.J == expected);
    CHECK(res.Z == ideal_sum(res.J, ideal_of(ext, {"x", "y"})));
}

TEST_CASE("symbolic residual: s < r gives J = (alpha), Z = I") {
    auto R = Ring<QQ>::make(QQ{}, {"x", "y"});
    auto res = symbolic_residual(ideal_of(R, {"x", "y"}), 1);
    REQUIRE(res.alpha.size() == 1);
    auto ext = res.J.ring();
    CHECK(res.J == Ideal<QQ>(ext, {res.alpha[0]}));
    CHECK(res.Z == ideal_of(ext, {"x", "y"}));
    CHECK(intersection_divisor(res) == res.Z);
}

TEST_CASE("symbolic residual: principal ideal") {
    auto R = Ring<QQ>::make(QQ{}, {"x"});
    auto res = symbolic_residual(ideal_of(R, {"x"}), 1);
    auto ext = res.J.ring();
    CHECK(res.J == ideal_of(ext, {"U1_1"}));
    CHECK(res.Z == ideal_of(ext, {"U1_1", "x"}));
}

TEST_CASE("symbolic residual: size cap") {
    auto R = Ring<QQ>::make(QQ{}, {"x", "y", "z"});
    auto I = ideal_of(R, {"x", "y", "z"});
    bool capped = false;
    try {
        symbolic_residual(I, 3);  // 3x3 = 9 > 6
    } catch (const Error& e) {
        capped = e.code() == Errc::SizeCapExceeded;
    }
    CHECK(capped);
}

TEST_CASE("graded link: complete intersection is degenerate") {
    auto R = ring4();
    auto I = ideal_of(R, {"x0^2 + x1^2 + x2^2 + x3^2", "x0*x1 - x2*x3"});
    auto res = graded_generic_link(I, 11);
    CHECK(res.degenerate);
    CHECK(res.J.is_unit());
    CHECK(res.Z == I);
    CHECK(intersection_divisor(res) == I);
    CHECK(res.genericity.alpha_is_regular_sequence);
    // alpha is exactly the generator set
    CHECK(Ideal<QQ>(R, res.alpha) == I);
}

TEST_CASE("graded link: twisted cubic") {
    auto R = ring4();
    auto I = twisted_cubic(R);
    auto res = graded_generic_link(I, 42);
    CHECK_FALSE(res.degenerate);
    CHECK(res.genericity.alpha_is_regular_sequence);
    CHECK(res.genericity.codim_J == 2);
    CHECK(res.genericity.codim_Z == 3);
    CHECK(max_generator_degree(res.J) <= sigma_of(I));
    // containment: alpha in J in (alpha : f) for the lowest-degree generator
    Ideal<QQ> A(R, res.alpha);
    CHECK(res.J.contains(A));
    auto gens = detail::descending_generators(I);
    Ideal<QQ> upper = colon(A, Ideal<QQ>(R, {gens.back()}));
    CHECK(upper.contains(res.J));
}

TEST_CASE("graded link: hypersurface times hyperplane, r = 1") {
    auto R = Ring<QQ>::make(QQ{}, {"x0", "x1", "x2"});
    auto I = ideal_of(R, {"x0^3", "x0*x1^2", "x0*x2^2"});
    auto res = graded_generic_link(I, 3);
    CHECK_FALSE(res.degenerate);
    REQUIRE(res.alpha.size() == 1);
    CHECK(res.alpha[0].degree() == 3);
    CHECK(res.genericity.codim_J == 1);
    CHECK(res.J == colon(Ideal<QQ>(R, {res.alpha[0]}), I));
}

TEST_CASE("max generator degree examples") {
    auto R = Ring<QQ>::make(QQ{}, {"x", "y"});
    CHECK(max_generator_degree(ideal_of(R, {"x", "y^2"})) == 2);
    CHECK(max_generator_degree(Ideal<QQ>::unit(R)) == 0);
}

TEST_CASE("alpha is homogeneous of the expected degrees") {
    auto R = ring4();
    for (auto* I : {"tc", "ci"}) {
        Ideal<QQ> ideal = (I[0] == 't')
                              ? twisted_cubic(R)
                              : ideal_of(R, {"x0^2 + x1^2 + x2^2 + x3^2",
                                             "x0^3 + x1^3 + x2^3 + x3^3"});
        auto res = graded_generic_link(ideal, 99);
        auto gens = detail::descending_generators(ideal);
        for (std::size_t j = 0; j < res.alpha.size(); ++j) {
            CHECK(res.alpha[j].is_homogeneous());
            CHECK(res.alpha[j].degree() == gens[j].degree());
        }
    }
}

TEST_CASE("liaison involution on unmixed ideals") {
    auto R = ring4();
    std::vector<Ideal<QQ>> ideals = {
        twisted_cubic(R),
        ideal_of(R, {"x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"}),
    };
    std::uint64_t seed = 5;
    for (const auto& I : ideals) {
        auto res = graded_generic_link(I, seed++);
        if (res.degenerate) {
            CHECK(res.Z == I);
            continue;
        }
        Ideal<QQ> A(R, res.alpha);
        CHECK(colon(A, res.J) == I);
    }
}

TEST_CASE("generator degrees bounded by sigma across seeds") {
    auto R = ring4();
    auto I = twisted_cubic(R);
    long long sigma = sigma_of(I);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull, 77ull}) {
        auto res = graded_generic_link(I, seed);
        if (res.degenerate) continue;
        CHECK(max_generator_degree(res.J) <= sigma);
        CHECK(res.genericity.codim_Z == codimension(I) + 1);
    }
}

TEST_CASE("identical seed gives identical results") {
    auto R = ring4();
    auto I = twisted_cubic(R);
    auto a = graded_generic_link(I, 2024);
    auto b = graded_generic_link(I, 2024);
    CHECK(a.seed == b.seed);
    CHECK(a.J == b.J);
    CHECK(a.Z == b.Z);
    REQUIRE(a.alpha.size() == b.alpha.size());
    for (std::size_t i = 0; i < a.alpha.size(); ++i) CHECK(a.alpha[i] == b.alpha[i]);
    REQUIRE(a.matrix.entries.size() == b.matrix.entries.size());
    for (std::size_t i = 0; i < a.matrix.entries.size(); ++i)
        CHECK(a.matrix.entries[i] == b.matrix.entries[i]);
}

TEST_CASE("graded link rejects bad inputs") {
    auto R = ring4();
    CHECK_THROWS_AS(graded_generic_link(Ideal<QQ>::unit(R), 1), Error);
    CHECK_THROWS_AS(graded_generic_link(Ideal<QQ>::zero(R), 1), Error);
    CHECK_THROWS_AS(graded_generic_link(ideal_of(R, {"x0^2 + x1"}), 1), Error);
    auto A = Ring<QQ>::make(QQ{}, {"x", "y"}, RingMode::Affine);
    CHECK_THROWS_AS(
        graded_generic_link(Ideal<QQ>(A, {parse_polynomial<QQ>("x", A)}), 1), Error);
}
