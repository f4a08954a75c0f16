#include "zcz/generators.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace zcz {

namespace {

std::vector<int> digit_vector(std::string_view digits) {
    std::vector<int> out;
    out.reserve(digits.size());
    for (char c : digits) out.push_back(c - '0');
    return out;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Sequence builtin_perfect(std::string_view name) {
    if (name == "tri9") return Sequence::from_digits(digit_vector("000012021"), 3);
    if (name == "quad16") return Sequence::from_digits(digit_vector("0000012302020321"), 4);
    if (name == "quad8") return Sequence::from_digits(digit_vector("01022122"), 4);
    if (name == "quad4") return Sequence::from_digits(digit_vector("0002"), 4);
    if (name == "ternary13")
        return Sequence::from_ternary({-1, -1, -1, -1, 0, 1, -1, 1, 0, 0, -1, 0, 1});
    throw std::invalid_argument("builtin_perfect: unknown name '" + std::string(name) + "'");
}

Sequence chu_perfect(long long n, long long u) {
    if (n < 1) throw std::invalid_argument("chu_perfect: length must be positive");
    if (n == 1) return Sequence::from_digits({0}, 1);
    if (u < 1 || u >= n || std::gcd(u, n) != 1)
        throw HypothesisError("chu_perfect: u must satisfy 1 <= u < n and gcd(u, n) = 1");
    std::vector<int> digits(n);
    if (n % 2 == 0) {
        // phase pi*u*k^2/n, i.e. digit u*k^2 over order 2n
        for (long long k = 0; k < n; ++k) digits[k] = static_cast<int>((u * ((k * k) % (2 * n))) % (2 * n));
        return Sequence::from_digits(std::move(digits), static_cast<int>(2 * n));
    }
    // phase pi*u*k*(k+1)/n, i.e. digit u*k*(k+1)/2 over order n
    for (long long k = 0; k < n; ++k) digits[k] = static_cast<int>((u * ((k * (k + 1) / 2) % n)) % n);
    return Sequence::from_digits(std::move(digits), static_cast<int>(n));
}

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ < 1 || entries_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("HadamardMatrix: entry count must be order^2");
    for (auto v : entries_)
        if (v != 1 && v != -1) throw std::invalid_argument("HadamardMatrix: entries must be +1 or -1");
}

HadamardMatrix sylvester(int t) {
    if (t < 0) throw std::invalid_argument("sylvester: exponent must be non-negative");
    if (t > 16) throw std::invalid_argument("sylvester: order too large");
    const int n = 1 << t;
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            e[static_cast<std::size_t>(r) * n + c] = std::popcount(static_cast<unsigned>(r & c)) % 2 ? -1 : 1;
    return HadamardMatrix(n, std::move(e));
}

HadamardMatrix paley(int q) {
    if (!is_prime(q) || q % 4 != 3)
        throw HypothesisError("paley: q must be a prime with q mod 4 = 3");
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[static_cast<long long>(x) * x % q] = 1;
    const int n = q + 1;
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
    auto set = [&](int r, int c, int v) { e[static_cast<std::size_t>(r) * n + c] = static_cast<std::int8_t>(v); };
    set(0, 0, 1);
    for (int j = 1; j < n; ++j) {
        set(0, j, 1);
        set(j, 0, -1);
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            set(a + 1, b + 1, a == b ? 1 : chi[((b - a) % q + q) % q]);
    return HadamardMatrix(n, std::move(e));
}

HadamardMatrix hadamard12() {
    // all rows start +1; rows 0..10 cycle an 11-long two-level core; row 11 all +1
    static constexpr std::int8_t core[11] = {1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1};
    const int n = 12;
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 1);
    for (int r = 0; r < 11; ++r)
        for (int c = 0; c < 11; ++c) e[static_cast<std::size_t>(r) * n + 1 + c] = core[(c + r) % 11];
    return HadamardMatrix(n, std::move(e));
}

SequenceSet orthogonal_set(const HadamardMatrix& h) {
    std::vector<Sequence> rows;
    rows.reserve(h.order());
    for (int r = 0; r < h.order(); ++r) {
        std::vector<int> digits(h.order());
        for (int c = 0; c < h.order(); ++c) digits[c] = h.at(r, c) == 1 ? 0 : 1;
        rows.push_back(Sequence::from_digits(std::move(digits), 2));
    }
    return SequenceSet(std::move(rows));
}

}  // namespace zcz
