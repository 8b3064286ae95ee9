#include <doctest.h>

#include "helpers.hpp"

using namespace skewcodes;
using namespace testutil;

TEST_SUITE("tower") {

TEST_CASE("extend_automorphism default and explicit exponents") {
    const auto e = extend_automorphism(2, 3, 1, 4);
    CHECK(e.n == 12);
    CHECK(e.k == 7);
    CHECK(extend_automorphism(2, 3, 1, 4, 1u).k == 1);
    CHECK(extend_automorphism(2, 8, 3, 2, 3u).k == 3);
    CHECK_THROWS_AS(extend_automorphism(2, 3, 1, 4, 4u), ValidationError);  // gcd(4, 12) != 1
    CHECK_THROWS_AS(extend_automorphism(2, 3, 1, 4, 5u), ValidationError);  // 5 != 1 mod 3
    CHECK_THROWS_AS(extend_automorphism(2, 4, 2, 2), ValidationError);      // gcd(h, mu) != 1
}

TEST_CASE("embedding candidates of the decoding example") {
    const auto b = bch16();
    const Tower& tw = *b.tower;
    const auto cands = embedding_candidates(tw.L(), tw.M(), tw.sigma(), tw.theta());
    CHECK(cands.size() == 8);
    CHECK(tw.M().format(cands.front()) == "a^514");
    CHECK(tw.epsilon_image() == tw.M().gen_pow(514));
    for (const auto& c : cands) CHECK(tw.theta()(c) == c.pow(8));
}

TEST_CASE("override validation") {
    auto L = Field::make({2, {1, 0, 1, 1, 1, 0, 0, 0, 1}, "b"});
    auto M = Field::make({2, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, "a"});
    const auto ext = extend_automorphism(2, 8, 3, 2, 3u);
    CHECK_THROWS_AS(Tower::make(L, M, ext, M->gen_pow(77)), ValidationError);
    CHECK_NOTHROW(Tower::make(L, M, ext, M->gen_pow(514)));
    CHECK_NOTHROW(Tower::make(L, M, ext, M->gen_pow(257)));
}

TEST_CASE("the worked n = 10 example has five compatible embeddings") {
    const auto h = ht10();
    const Tower& tw = *h.tower;
    const auto cands = embedding_candidates(tw.L(), tw.M(), tw.sigma(), tw.theta());
    std::vector<std::string> names;
    for (const auto& c : cands) names.push_back(tw.M().format(c));
    CHECK(names.size() == 5);
    CHECK(names.front() == "a^528");
    CHECK(std::find(names.begin(), names.end(), "a^33") != names.end());
}

TEST_CASE("embedding is a field map intertwining sigma and theta") {
    for (const auto& tw : {conway_tower(2, 1, 3, 4, 1, 1u), conway_tower(2, 2, 3, 3, 1, 1u), conway_tower(3, 1, 3, 4, 1, 1u)}) {
        const Field& L = tw->L();
        Rng rng(5);
        for (int i = 0; i < 100; ++i) {
            const auto x = random_element(L, rng), y = random_element(L, rng);
            CHECK(tw->embed(x * y) == tw->embed(x) * tw->embed(y));
            CHECK(tw->embed(x + y) == tw->embed(x) + tw->embed(y));
            CHECK(tw->theta()(tw->embed(x)) == tw->embed(tw->sigma()(x)));
            CHECK(tw->pull_back(tw->embed(x)) == x);
        }
        CHECK(tw->pi().order() == tw->s());
    }
}

TEST_CASE("pull_back rejects elements outside the image") {
    const auto b = bch16();
    const Tower& tw = *b.tower;
    CHECK_FALSE(tw.pull_back(tw.M().gen_pow(1)).has_value());
    CHECK(tw.pull_back(tw.M().gen_pow(257)).has_value());  // GF(2^8)* = <a^257>
}

TEST_CASE("normality") {
    const auto b = bch16();
    const Tower& tw = *b.tower;
    CHECK(is_normal(tw.M().gen_pow(11), tw.theta()));
    CHECK_FALSE(is_normal(tw.M().gen_pow(5), tw.theta()));  // trace zero
    CHECK_FALSE(is_normal(tw.M().one(), tw.theta()));
    const auto a = normal_element_search(tw.theta(), 0);
    CHECK(is_normal(a, tw.theta()));
    CHECK(normal_element_search(tw.theta(), 0, tw.M().gen_pow(11)) == tw.M().gen_pow(11));
}

}
