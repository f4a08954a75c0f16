#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zcz {

// Thrown when a construction hypothesis does not hold (sequence not perfect,
// set not orthogonal, gcd/divisibility constraint violated, ...).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed set files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entry-level comparison tolerance on the floating path.
inline constexpr double kEntryEps = 1e-9;

// Correlation-value zero tolerance on the floating path scales with length.
inline constexpr double corr_tolerance(std::size_t n) { return 1e-6 * static_cast<double>(n); }

// Exact N/M - 1 bound values are fractional when M does not divide N.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    long long floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator==(long long v) const { return den == 1 && num == v; }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace zcz
