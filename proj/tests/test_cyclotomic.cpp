#include <complex>
#include <vector>

#include "doctest.h"
#include "zcz/cyclotomic.hpp"

using namespace zcz;

TEST_CASE("cyclotomic polynomial coefficients") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("full root sums vanish exactly") {
    for (int n : {2, 3, 4, 6, 8, 12, 24}) {
        CycValue v(n);
        for (int k = 0; k < n; ++k) v.add_root(k);
        CHECK(v.is_zero());
        CHECK(v.as_integer() == 0);
    }
}

TEST_CASE("partial sums are nonzero") {
    CycValue v(3);
    v.add_root(0);
    v.add_root(1);
    CHECK_FALSE(v.is_zero());
    CHECK_FALSE(v.as_integer().has_value());
}

TEST_CASE("conjugate pairs reduce to integers") {
    CycValue v(4);
    v.add_root(1);
    v.add_root(3);
    CHECK(v.is_zero());

    CycValue w(6);  // zeta + conj(zeta) = 1 over sixth roots
    w.add_root(1);
    w.add_root(5);
    CHECK(w.as_integer() == 1);

    CycValue c(1);
    c.add_root(0, 3);
    CHECK(c.as_integer() == 3);

    CycValue r(8);  // zeta_8 + conj(zeta_8) = sqrt(2), irrational
    r.add_root(1);
    r.add_root(7);
    CHECK_FALSE(r.is_zero());
    CHECK_FALSE(r.as_integer().has_value());
    CHECK(r.magnitude() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("complex evaluation matches the root table") {
    CycValue v(12);
    v.add_root(2, 3);
    v.add_root(7, -2);
    const auto& roots = unit_roots(12);
    const std::complex<double> want = 3.0 * roots[2] - 2.0 * roots[7];
    CHECK(std::abs(v.to_complex() - want) < 1e-12);
    CHECK(v.magnitude() == doctest::Approx(std::abs(want)).epsilon(1e-12));
}

TEST_CASE("negation flips the value") {
    CycValue v(4);
    v.add_root(0, 5);
    v.negate();
    CHECK(v.as_integer() == -5);
}
