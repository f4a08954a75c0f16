#include "doctest.h"
#include "zcz/catalog.hpp"
#include "zcz/correlate.hpp"

using namespace zcz;

TEST_CASE("catalog lists the reproducible parameter triples") {
    const auto& rows = catalog_rows();
    REQUIRE(rows.size() == 20);
    CHECK(rows[0].n == 8);
    CHECK(rows[0].m == 2);
    CHECK(rows[0].zcz == 2);
    CHECK(rows[0].constructible);
    CHECK(rows[8].n == 192);
    CHECK(rows[8].m == 12);
    CHECK(rows[8].zcz == 12);
    CHECK(rows[8].exclusive);
    CHECK(rows[18].n == 288);
    CHECK(rows[18].m == 36);
    CHECK_FALSE(rows[18].constructible);
    for (const auto& r : rows) CHECK_FALSE(r.recipe.empty());
}

TEST_CASE("every constructible row has a measurable witness") {
    const auto& rows = catalog_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].constructible) {
            CHECK_THROWS_AS(catalog_witness(i), HypothesisError);
            continue;
        }
        const auto w = catalog_witness(i);
        CHECK(w.set.length() == rows[i].n);
        CHECK(w.set.size() == rows[i].m);
        REQUIRE(w.claim.zcz.has_value());
        CHECK(*w.claim.zcz == rows[i].zcz);
        CHECK(measure_zcz(w.set) == rows[i].zcz);
    }
}
