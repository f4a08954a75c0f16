#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "zcz/correlate.hpp"
#include "zcz/generators.hpp"
#include "zcz/interleave.hpp"
#include "zcz/sequence.hpp"

using namespace zcz;

TEST_CASE("association reads the column matrix row-major") {
    const SequenceSet a({Sequence::from_digits({0, 1}, 4), Sequence::from_digits({2, 3}, 4)});
    const auto u = associate(a);
    CHECK(u.digits() == std::vector<int>{0, 2, 1, 3});
    CHECK(u.root_order() == 4);
}

TEST_CASE("association falls back to entries for float sets") {
    const SequenceSet a({Sequence::from_complex({{1, 0}, {0, 1}}),
                         Sequence::from_complex({{0.5, 0}, {0, -1}})});
    const auto u = associate(a);
    CHECK_FALSE(u.is_exact());
    CHECK(std::abs(u.entry(1) - std::complex<double>(0.5, 0)) < 1e-12);
    CHECK(std::abs(u.entry(2) - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("two-column binary interleave reproduces the reference pair") {
    const SequenceSet a({Sequence::from_digits({0, 1, 1}, 2),    // (1, -1, -1)
                         Sequence::from_digits({0, 0, 1}, 2)});  // (1, 1, -1)
    const auto s = interleave(a, orthogonal_set(sylvester(1)));
    REQUIRE(s.size() == 2);
    CHECK(s[0].digits() == std::vector<int>{0, 0, 1, 0, 1, 1});
    CHECK(s[1].digits() == std::vector<int>{0, 1, 1, 1, 1, 0});
}

TEST_CASE("interleaving mixed orders lifts to the lcm") {
    const auto a = chu_perfect(3, 1);  // order 3
    const SequenceSet cols({left_shift(a, 0), left_shift(a, 2)});
    const auto s = interleave(cols, orthogonal_set(sylvester(1)));  // order 2
    CHECK(s[0].root_order() == 6);
    CHECK(s[0].equals(Sequence::from_digits({0, 0, 2, 0, 0, 2}, 6)));
    CHECK(s[1].equals(Sequence::from_digits({0, 3, 2, 3, 0, 5}, 6)));
}

TEST_CASE("interleave validates its inputs") {
    const SequenceSet a({Sequence::from_digits({0, 1}, 2), Sequence::from_digits({0, 0}, 2)});
    const SequenceSet b3 = orthogonal_set(sylvester(2));
    CHECK_THROWS_AS(interleave(a, b3), HypothesisError);
    const SequenceSet skew({Sequence::from_digits({0, 0}, 2), Sequence::from_digits({1, 1}, 2)});
    CHECK_THROWS_AS(interleave(a, skew), HypothesisError);
    const SequenceSet rect({Sequence::from_digits({0, 0, 0}, 2), Sequence::from_digits({0, 1, 0}, 2)});
    CHECK_THROWS_AS(interleave(a, rect), HypothesisError);
}

TEST_CASE("column decomposition matches direct correlation on exact input") {
    const SequenceSet a({Sequence::from_digits({0, 1, 2}, 4), Sequence::from_digits({0, 0, 3}, 4)});
    const auto b = orthogonal_set(sylvester(1));
    const auto s = interleave(a, b);
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t k = 0; k < 2; ++k) {
            const auto direct = cross_correlation(s[h], s[k], CorrMethod::Direct);
            for (long long tau = 0; tau < 6; ++tau)
                CHECK(std::abs(prop1_correlation(a, b, h, k, tau) - direct.values[tau]) < 1e-9 * 6);
        }
}

TEST_CASE("column decomposition matches direct correlation on float input") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ph(0.0, 6.28318530717958647692);
    std::vector<Sequence> cols;
    for (int c = 0; c < 2; ++c) {
        std::vector<std::complex<double>> e(5);
        for (auto& x : e) x = std::polar(1.0, ph(rng));
        cols.push_back(Sequence::from_complex(std::move(e)));
    }
    const SequenceSet a(cols);
    const auto b = orthogonal_set(sylvester(1));
    const auto s = interleave(a, b);
    CHECK_FALSE(s[0].is_exact());
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t k = 0; k < 2; ++k) {
            const auto direct = cross_correlation(s[h], s[k], CorrMethod::Direct);
            for (long long tau = 0; tau < 10; ++tau)
                CHECK(std::abs(prop1_correlation(a, b, h, k, tau) - direct.values[tau]) < 1e-9 * 10);
        }
}

TEST_CASE("decomposition rejects incompatible shapes") {
    const SequenceSet a({Sequence::from_digits({0, 1}, 2), Sequence::from_digits({0, 0}, 2)});
    const auto b = orthogonal_set(sylvester(2));
    CHECK_THROWS_AS(prop1_correlation(a, b, 0, 1, 0), HypothesisError);
    const auto b2 = orthogonal_set(sylvester(1));
    CHECK_THROWS_AS(prop1_correlation(a, b2, 0, 2, 0), std::invalid_argument);
}
