#include <doctest.h>

#include "helpers.hpp"

using namespace skewcodes;
using namespace testutil;

TEST_SUITE("field") {

TEST_CASE("GF(2^8) with the decoding example modulus") {
    auto F = Field::make({2, {1, 0, 1, 1, 1, 0, 0, 0, 1}, "b"});
    CHECK(F->order() == 256);
    CHECK(F->has_log_table());
    const auto b = F->generator();
    CHECK(b.pow(255).is_one());
    CHECK(b.pow(85) != F->one());
    CHECK(F->format(b.pow(48)) == "b^48");
    CHECK(F->parse("b^48") == b.pow(48));
    CHECK(F->parse("b^{-1}") == b.inv());
    CHECK(F->parse("[0,1]") == b);
    CHECK(F->format(F->zero()) == "0");
    CHECK(F->format(F->one()) == "1");
    CHECK(F->format(b, Notation::coords) == "[0,1,0,0,0,0,0,0]");
}

TEST_CASE("GF(2^16) log of the syndrome entries") {
    auto M = Field::make({2, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, "a"});
    const auto a = M->generator();
    CHECK(M->log(a.pow(48031)) == 48031u);
    CHECK((a.pow(40000) * a.pow(30000)) == a.pow(70000 - 65535));
    const FrobeniusMap th(*M, 3);
    CHECK(th(a) == a.pow(8));
    CHECK(th.order() == 16);
    CHECK(th.fixed_degree() == 1);
}

TEST_CASE("reducible and malformed moduli are rejected") {
    CHECK_THROWS_AS(Field::make({2, {1, 0, 1}, "a"}), ValidationError);
    CHECK_THROWS_AS(Field::make({2, {1, 1, 0, 1, 0}, "a"}), ValidationError);  // not monic
    CHECK_THROWS_AS(Field::make({4, {1, 1, 1}, "a"}), ValidationError);        // p not prime
    CHECK_THROWS_AS(Field::make({3, {1, 3, 1}, "a"}), ValidationError);        // digit >= p
    CHECK_THROWS_AS(Field::make({2, {1}, "a"}), ValidationError);
}

TEST_CASE("Conway polynomials are irreducible and primitive") {
    for (auto [p, m] : {std::pair{2u, 3u}, {2u, 12u}, {2u, 16u}, {2u, 20u}, {3u, 12u}, {5u, 9u}}) {
        auto F = conway_field(p, m);
        CHECK(F->degree() == m);
        if (F->has_log_table()) CHECK(F->log(F->generator()) == 1u);
    }
}

TEST_CASE("arithmetic laws on random elements") {
    Rng rng(1);
    for (auto [p, m] : {std::pair{2u, 8u}, {2u, 24u}, {3u, 4u}, {3u, 16u}, {5u, 3u}, {2u, 10u}}) {
        auto F = conway_field(p, m);
        const FrobeniusMap fr(*F, 1);
        for (int i = 0; i < 100; ++i) {
            const auto x = random_nonzero(*F, rng), y = random_element(*F, rng), z = random_element(*F, rng);
            CHECK((x * x.inv()).is_one());
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((y - z) + z == y);
            CHECK(fr(y * z) == fr(y) * fr(z));
            CHECK(fr.apply(y, F->degree()) == y);
            CHECK(fr.apply(fr.apply(y, 3), -3) == y);
            CHECK(x.pow(static_cast<std::int64_t>(F->order()) - 1).is_one());
            CHECK(F->parse(F->format(y)) == y);
            CHECK(F->parse(F->format(y, Notation::coords)) == y);
        }
    }
}

TEST_CASE("fixed field basis of a Frobenius power") {
    auto F = conway_field(2, 12);
    const FrobeniusMap phi(*F, 4);  // fixes GF(2^4)
    const auto basis = fixed_field_basis(phi);
    CHECK(basis.size() == 4);
    for (const auto& k : basis) CHECK(phi(k) == k);
    CHECK(gfp_rank(basis) == 4);
}

TEST_CASE("GF(p) linear algebra helpers") {
    using gfp::Vec;
    const std::vector<Vec> rows = {{1, 2, 0}, {2, 1, 0}, {0, 0, 0}};
    CHECK(gfp::rank(rows, 3) == 1);  // second row = 2 * first mod 3
    const auto ker = gfp::kernel(rows, 3, 3);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK((v[0] + 2 * v[1]) % 3 == 0);
}

}
