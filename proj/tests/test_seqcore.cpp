#include <complex>
#include <vector>

#include "doctest.h"
#include "zcz/sequence.hpp"

using namespace zcz;

TEST_CASE("rational floor and printing") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4, 2) == 2);
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(16, 3).str() == "16/3");
    CHECK(Rational(16, 3).floor() == 5);
    CHECK(Rational(3, -2) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("digit sequences evaluate to unit roots") {
    const auto s = Sequence::from_digits({0, 1, 2}, 3);
    REQUIRE(s.length() == 3);
    CHECK(s.is_exact());
    CHECK(s.root_order() == 3);
    const double c = -0.5, si = std::sqrt(3.0) / 2.0;
    CHECK(std::abs(s.entry(0) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(s.entry(1) - std::complex<double>(c, si)) < 1e-12);
    CHECK(std::abs(s.entry(2) - std::complex<double>(c, -si)) < 1e-12);

    CHECK_THROWS_AS(Sequence::from_digits({0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Sequence::from_digits({-1, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Sequence::from_digits({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Sequence::from_digits({0}, 0), std::invalid_argument);
}

TEST_CASE("ternary sequences carry zero markers") {
    const auto s = Sequence::from_ternary({1, -1, 0});
    CHECK(s.is_exact());
    CHECK(s.alphabet().kind == AlphabetKind::Ternary);
    CHECK(s.digits() == std::vector<int>{0, 1, -1});
    CHECK(std::abs(s.entry(2)) == 0.0);
    CHECK_THROWS_AS(Sequence::from_ternary({2}), std::invalid_argument);
}

TEST_CASE("float sequences have no digit backing") {
    const auto s = Sequence::from_complex({{0.5, 0.5}, {1, 0}});
    CHECK_FALSE(s.is_exact());
    CHECK(s.root_order() == 0);
}

TEST_CASE("digit lifting to a multiple of the order") {
    const auto s = Sequence::from_digits({0, 1, 2}, 3);
    CHECK(s.digits_at_order(6) == std::vector<int>{0, 2, 4});
    CHECK(s.equals(Sequence::from_digits({0, 2, 4}, 6)));
    CHECK_THROWS_AS(s.digits_at_order(4), std::invalid_argument);
}

TEST_CASE("left shift rotates digits") {
    const auto s = Sequence::from_digits({0, 1, 2, 3}, 4);
    CHECK(left_shift(s, 1).digits() == std::vector<int>{1, 2, 3, 0});
    CHECK(left_shift(s, -1).digits() == std::vector<int>{3, 0, 1, 2});
    CHECK(left_shift(s, 4).equals(s));
    CHECK(left_shift(s, 9).equals(left_shift(s, 1)));
}

TEST_CASE("shift equivalence finds the smallest shift") {
    const auto s = Sequence::from_digits({0, 1, 2, 3}, 4);
    CHECK(shift_equivalent(left_shift(s, 2), s) == 2);
    CHECK(shift_equivalent(s, s) == 0);
    CHECK_FALSE(shift_equivalent(s, Sequence::from_digits({0, 0, 0, 0}, 4)).has_value());
}

TEST_CASE("set shift equivalence needs one common shift") {
    const auto a = Sequence::from_digits({0, 1, 2, 3}, 4);
    const auto b = Sequence::from_digits({0, 0, 1, 3}, 4);
    const SequenceSet s({a, b});
    CHECK(sets_shift_equivalent(shift_set(s, 3), s));
    const SequenceSet mixed({left_shift(a, 1), left_shift(b, 2)});
    CHECK_FALSE(sets_shift_equivalent(mixed, s));
}

TEST_CASE("set construction validates shape") {
    const auto a = Sequence::from_digits({0, 1}, 2);
    CHECK_THROWS_AS(SequenceSet({}), std::invalid_argument);
    CHECK_THROWS_AS(SequenceSet({a, Sequence::from_digits({0, 1, 0}, 2)}), std::invalid_argument);
    const SequenceSet dup({a, a});
    CHECK_FALSE(dup.members_distinct());
    CHECK(SequenceSet({a, Sequence::from_digits({0, 0}, 2)}).members_distinct());
}

TEST_CASE("common order is the lcm of member orders") {
    const auto tri = Sequence::from_digits({0, 1, 2}, 3);
    const auto bin = Sequence::from_digits({0, 1, 0}, 2);
    CHECK(SequenceSet({tri, bin}).common_order() == 6);
    CHECK(SequenceSet({tri, tri}).common_order() == 3);
    const auto f = Sequence::from_complex({{1, 0}, {0, 1}, {0.5, 0.5}});
    CHECK_FALSE(SequenceSet({tri, f}).common_order().has_value());
}

TEST_CASE("claims ride along with sets") {
    const auto a = Sequence::from_digits({0, 1}, 2);
    const SequenceSet s({a}, SetClaim::zcz_claim(3));
    REQUIRE(s.claim().has_value());
    CHECK(s.claim()->kind == SetClaim::Kind::Zcz);
    CHECK(s.claim()->zcz == 3);
    const auto d = s.with_claim(SetClaim::delta_claim(2.5));
    CHECK(d.claim()->kind == SetClaim::Kind::Delta);
    CHECK(d.claim()->delta == 2.5);
    CHECK(shift_set(s, 1).claim()->zcz == 3);
}

TEST_CASE("shift sequence extension adds one per wrap") {
    const ShiftSequence e({0, 5}, 9);
    CHECK(e.size() == 2);
    CHECK(e.modulus() == 9);
    CHECK(e.at(0) == 0);
    CHECK(e.at(1) == 5);
    CHECK(e.at(2) == 1);
    CHECK(e.at(3) == 6);
    CHECK(e.at(5) == 7);
    CHECK_THROWS_AS(ShiftSequence({}, 9), std::invalid_argument);
    CHECK_THROWS_AS(ShiftSequence({0}, 0), std::invalid_argument);
}
