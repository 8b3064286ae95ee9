#include <doctest.h>

#include "properties.hpp"

namespace {

void expect(const props::Result& r) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.cases > 0);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {
TEST_CASE("degree laws") { expect(props::degree_laws()); }
TEST_CASE("Bezout laws") { expect(props::bezout_laws()); }
TEST_CASE("lclm laws") { expect(props::lclm_laws()); }
TEST_CASE("circulant nonsingularity") { expect(props::circulant()); }
TEST_CASE("rank lower bound") { expect(props::rank_lower_bound()); }
TEST_CASE("pseudobound") { expect(props::pseudobound_laws()); }
TEST_CASE("phi isomorphism") { expect(props::phi_isomorphism()); }
TEST_CASE("root correspondence") { expect(props::root_correspondence()); }
TEST_CASE("root space dimension") { expect(props::root_space_dimension()); }
}
