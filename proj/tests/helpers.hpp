#pragma once

#include <random>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "skewcodes/codes.hpp"

namespace testutil {

using namespace skewcodes;
using Rng = std::mt19937_64;

inline std::string fixture(const std::string& name) { return std::string(SKEWCODES_FIXTURE_DIR) + "/" + name; }

inline nlohmann::json load(const std::string& name) { return cli::read_json_file(fixture(name)); }

inline cli::BuiltCode bch16() { return cli::build(cli::parse_config(load("bch_n16.json"))); }
inline cli::BuiltCode ht10() { return cli::build(cli::parse_config(load("ht_n10.json"))); }

inline std::shared_ptr<const Field> conway_field(unsigned p, unsigned m, const char* name = "a") {
    return Field::make({p, conway_polynomial(p, m), name});
}

/// Tower with Conway moduli, q = p^d.
inline std::shared_ptr<const Tower> conway_tower(unsigned p, unsigned d, unsigned mu, unsigned s, unsigned h,
                                                 std::optional<unsigned> k = std::nullopt) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d; ++i) q *= p;
    auto L = conway_field(p, d * mu, "b");
    auto M = conway_field(p, d * mu * s, "a");
    return Tower::make(L, M, extend_automorphism(q, mu, h, s, k));
}

inline FieldElement random_element(const Field& F, Rng& rng) { return F.element(rng() % F.order()); }
inline FieldElement random_nonzero(const Field& F, Rng& rng) { return F.element(1 + rng() % (F.order() - 1)); }

inline SkewPolynomial random_poly(const FrobeniusMap& tw, int degree, Rng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_element(tw.field(), rng));
    c.push_back(random_nonzero(tw.field(), rng));
    return SkewPolynomial(tw, std::move(c));
}

inline Word random_error(const Field& L, int n, int weight, Rng& rng) {
    Word e(n, L.zero());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int j = 0; j < weight; ++j) e[pos[j]] = random_nonzero(L, rng);
    return e;
}

}  // namespace testutil
