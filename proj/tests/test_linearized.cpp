#include <doctest.h>

#include "helpers.hpp"
#include "skewcodes/linearized.hpp"

using namespace skewcodes;
using namespace testutil;

TEST_SUITE("linearized") {

TEST_CASE("linearize is a bijection onto operators") {
    auto F = conway_field(2, 8);
    const FrobeniusMap th(*F, 1);
    const auto x = SkewPolynomial::monomial(th, F->one(), 1);
    const LinearizedPoly X = linearize(x);
    CHECK(X.codes() == std::vector<Code>{0, 1});
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_element(*F, rng);
        CHECK(X(g) == th(g));
        const auto f = random_poly(th, 4, rng);
        CHECK(delinearize(linearize(f)) == f);
        CHECK(linearize(SkewPolynomial::constant(th, g))(F->generator()) == g * F->generator());
    }
}

TEST_CASE("x^n - 1 annihilates everything") {
    auto F = conway_field(2, 8);
    const FrobeniusMap th(*F, 1);
    const LinearizedPoly P = linearize(SkewPolynomial::x_pow_minus_one(th, 8));
    for (Code c = 0; c < 256; ++c) CHECK(P(F->element(c)).is_zero());
    CHECK(root_space(P).size() == 8);
}

TEST_CASE("root spaces") {
    auto F = conway_field(2, 12);
    const FrobeniusMap th(*F, 4);  // K = GF(16), order 3
    const auto a = normal_element_search(th);
    const auto beta = a.inv() * th(a);
    const auto Z = root_space(linearize(SkewPolynomial::linear(th, beta)));
    CHECK(Z.size() == 1);
    CHECK(root_space_gfp_dimension(linearize(SkewPolynomial::linear(th, beta))) == 4);
    CHECK(linearize(SkewPolynomial::linear(th, beta))(a).is_zero());
    CHECK(root_space(linearize(SkewPolynomial::one(th))).empty());
}

TEST_CASE("minimal operators") {
    // mu = 1: L = K, s = n; a normal element has a full orbit
    auto K = Field::make({2, {1, 1}, "b"});
    auto tw = Tower::make(K, conway_field(2, 8), extend_automorphism(2, 1, 0, 8, 1u));
    const auto a = normal_element_search(tw->theta());
    CHECK(minimal_linearized(*tw, a).degree() == 8);
    CHECK(minimal_linearized(*tw, tw->M().one()).degree() == 1);
    CHECK_THROWS_AS(minimal_linearized(*tw, tw->M().zero()), ValidationError);

    auto big = conway_tower(2, 1, 3, 4, 1, 1u);
    Rng rng(12);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_nonzero(big->M(), rng);
        const LinearizedPoly P = minimal_linearized(*big, g);
        CHECK(P(g).is_zero());
        CHECK(P.degree() == static_cast<int>(orbit_rank_over_L(*big, g)));
    }
}

}
