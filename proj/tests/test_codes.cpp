#include <doctest.h>

#include "helpers.hpp"

using namespace skewcodes;
using namespace testutil;

TEST_SUITE("codes") {

TEST_CASE("ht_set and coset_closure") {
    const DefiningSet t = ht_set({0, 3, 0, 5, 1, 12}, 3, 4);
    CHECK(t.indices == std::vector<int>{0, 5});
    CHECK(coset_closure(t).indices == std::vector<int>{0, 2, 3, 5, 6, 8, 9, 11});
    const DefiningSet u = ht_set({0, 4, 1, 3, 2, 10}, 5, 2);
    CHECK(u.indices == std::vector<int>{0, 2, 3, 5, 6, 8});
    CHECK(coset_closure(u).indices == std::vector<int>{0, 1, 2, 3, 5, 6, 7, 8});
    DefiningSet all{{}, 6, 3, 2};
    for (int i = 0; i < 6; ++i) all.indices.push_back(i);
    CHECK(coset_closure(all).indices == all.indices);
}

TEST_CASE("HTParams validation") {
    CHECK_NOTHROW(HTParams{0, 4, 0, 3, 0, 16}.validate());
    CHECK_THROWS_AS((HTParams{0, 3, 0, 2, 1, 12}.validate()), ValidationError);   // gcd(t1, n) != 1
    CHECK_THROWS_AS((HTParams{0, 3, 1, 5, 6, 12}.validate()), ValidationError);   // gcd(n, t2) >= delta
    CHECK_THROWS_AS((HTParams{0, 1, 0, 1, 1, 12}.validate()), ValidationError);   // delta < 2
}

TEST_CASE("ht_bound") {
    const DefiningSet t{{0, 2, 3, 5, 6, 8, 9, 11}, 12, 3, 4, true};
    const BoundResult r = ht_bound(t);
    CHECK(r.bound == 3);
    CHECK(ht_admissible(t, {0, 3, 0, 5, 1, 12}));
    CHECK(r.witness.delta + r.witness.r == 3);
    CHECK(ht_admissible(t, r.witness));
    CHECK(ht_bound({{0}, 7, 1, 7, false}).bound == 2);
    CHECK(ht_bound({{}, 7, 1, 7, false}).bound == 0);
}

TEST_CASE("the n = 16 BCH code") {
    const auto b = bch16();
    const auto& c = b.code;
    CHECK(c.n == 16);
    CHECK(c.dim == 4);
    CHECK(c.g_bar_L.degree() == 12);
    CHECK(c.g_T.degree() == 6);
    CHECK(c.designed_distance == 7);
    CHECK(right_divides(c.g_bar, SkewPolynomial::x_pow_minus_one(c.g_bar.twist(), 16)));
    CHECK(right_divides(c.g_T, c.g_bar));
    CHECK(defining_set_of(c.g_bar, c.beta, 16, 8, 2) == c.T_closed);
    CHECK(defining_set_of(c.g_T, c.beta, 16, 8, 2).indices == c.T.indices);
}

TEST_CASE("encode and message round trip") {
    const auto b = bch16();
    const auto& c = b.code;
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        Word m(c.dim);
        for (auto& x : m) x = random_element(c.L(), rng);
        const Word w = encode(c, m);
        CHECK(is_codeword(c, w));
        CHECK(message_of(c, w) == SkewPolynomial(b.tower->sigma(), m));
    }
    Word bad = encode(c, Word(c.dim, c.L().one()));
    bad[3] += c.L().one();
    CHECK_FALSE(is_codeword(c, bad));
    CHECK_THROWS_AS(encode(c, SkewPolynomial::monomial(b.tower->sigma(), c.L().one(), 4)), ValidationError);
}

TEST_CASE("generator and parity check matrices agree") {
    const auto b = bch16();
    const auto& c = b.code;
    const Matrix G = generator_matrix(c);
    const Matrix H = parity_check_matrix(c);
    CHECK(G.rows() == 4);
    CHECK(H.rows() == 16);
    CHECK(H.cols() == 6);
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j) {
            FieldElement acc = c.M().zero();
            for (int k = 0; k < c.n; ++k) acc += b.tower->embed(G.at(i, k)) * H.at(k, j);
            CHECK(acc.is_zero());
        }
    CHECK(rank(G) == 4);
}

TEST_CASE("the n = 10 Hartmann-Tzeng code") {
    const auto h = ht10();
    const auto& c = h.code;
    CHECK(c.dim == 2);
    CHECK(c.designed_distance == 5);
    CHECK(min_distance_bruteforce(c) == 9);
    CHECK(min_distance_bruteforce_serial(c) == 9);
}

TEST_CASE("brute force respects the cap") {
    const auto b = bch16();
    CHECK_THROWS_AS(min_distance_bruteforce(b.code, 1000), CapExceeded);
    CHECK_THROWS_AS(min_distance_bruteforce_serial(b.code, 1000), CapExceeded);
}

TEST_CASE("s = 1 codes have T closed = T") {
    auto F = conway_field(2, 8);
    auto tw = Tower::make(F, F, extend_automorphism(2, 8, 1, 1));
    const auto a = normal_element_search(tw->theta());
    const auto c = build_bch(tw, a, 3, 1);
    CHECK(c.T.indices == c.T_closed.indices);
    CHECK(c.dim == 6);
    CHECK(min_distance_supports(c) == 3);
}

TEST_CASE("non-normal alpha and full closure are rejected") {
    const auto b = bch16();
    CHECK_THROWS_AS(build_bch(b.tower, b.tower->M().gen_pow(5), 7, 11), ValidationError);
    CHECK_THROWS_AS(build_code(b.tower, b.code.alpha, {0, 16, 0, 1, 1, 16}), ValidationError);
}

}
