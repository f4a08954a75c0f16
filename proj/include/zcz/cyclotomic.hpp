#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace zcz {

// Coefficients of the n-th cyclotomic polynomial, low degree first. Cached; thread-safe.
const std::vector<long long>& cyclotomic_polynomial(int n);

// Unit roots exp(2*pi*i*k/n) for k in [0, n). Cached; thread-safe.
const std::vector<std::complex<double>>& unit_roots(int n);

// Integer combination of n-th roots of unity: sum_k counts[k] * zeta_n^k.
// Supports exact zero and exact rational-integer detection by reduction
// modulo the n-th cyclotomic polynomial.
class CycValue {
  public:
    explicit CycValue(int order) : order_(order), counts_(order, 0) {}
    CycValue(int order, std::vector<long long> counts);

    int order() const { return order_; }
    const std::vector<long long>& counts() const { return counts_; }

    void add_root(int digit, long long count = 1) { counts_[digit] += count; }
    void negate();

    bool is_zero() const;
    // Set when the value reduces to a rational integer.
    std::optional<long long> as_integer() const;
    std::complex<double> to_complex() const;
    double magnitude() const;

  private:
    // Remainder of the counts polynomial mod the cyclotomic polynomial.
    std::vector<long long> reduced() const;

    int order_;
    std::vector<long long> counts_;
};

}  // namespace zcz
