#include "zcz/interleave.hpp"

#include <numeric>

#include "zcz/correlate.hpp"

namespace zcz {

namespace {

using cd = std::complex<double>;

}  // namespace

Sequence associate(const SequenceSet& a) {
    const std::size_t m = a.length();
    const std::size_t n = a.size();
    const auto order = a.common_order();
    if (order) {
        std::vector<int> digits(m * n);
        std::vector<std::vector<int>> cols;
        cols.reserve(n);
        for (const auto& seq : a.members()) cols.push_back(seq.digits_at_order(*order));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < n; ++s) digits[r * n + s] = cols[s][r];
        return Sequence::from_unit_digits(std::move(digits), *order);
    }
    std::vector<cd> entries(m * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < n; ++s) entries[r * n + s] = a[s].entry(r);
    return Sequence::from_complex(std::move(entries));
}

SequenceSet interleave(const SequenceSet& a, const SequenceSet& b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw HypothesisError("interleave: column set and orthogonal set sizes differ");
    if (b.length() != n)
        throw HypothesisError("interleave: orthogonal set must be square");
    if (!is_complete_orthogonal(b))
        throw HypothesisError("interleave: second argument is not a complete orthogonal set");

    const Sequence u = associate(a);
    const std::size_t total = u.length();

    std::vector<Sequence> out;
    out.reserve(n);
    const auto order_u = u.is_exact() ? std::optional<int>(u.root_order()) : std::nullopt;
    const auto order_b = b.common_order();
    if (order_u && order_b) {
        const int common = static_cast<int>(std::lcm<long long>(*order_u, *order_b));
        const auto du = u.digits_at_order(common);
        for (std::size_t h = 0; h < n; ++h) {
            const auto dbh = b[h].digits_at_order(common);
            std::vector<int> digits(total);
            for (std::size_t i = 0; i < total; ++i) {
                const int x = du[i];
                const int y = dbh[i % n];
                digits[i] = (x < 0 || y < 0) ? -1 : (x + y) % common;
            }
            out.push_back(Sequence::from_unit_digits(std::move(digits), common));
        }
    } else {
        for (std::size_t h = 0; h < n; ++h) {
            std::vector<cd> entries(total);
            for (std::size_t i = 0; i < total; ++i) entries[i] = u.entry(i) * b[h].entry(i % n);
            out.push_back(Sequence::from_complex(std::move(entries)));
        }
    }
    return SequenceSet(std::move(out));
}

std::complex<double> prop1_correlation(const SequenceSet& a, const SequenceSet& b,
                                       std::size_t h, std::size_t k, long long tau) {
    const long long n = static_cast<long long>(a.size());
    const long long m = static_cast<long long>(a.length());
    if (b.size() != static_cast<std::size_t>(n) || b.length() != static_cast<std::size_t>(n))
        throw HypothesisError("prop1_correlation: set sizes are incompatible");
    if (h >= b.size() || k >= b.size())
        throw std::invalid_argument("prop1_correlation: row index out of range");
    const long long total = m * n;
    tau = ((tau % total) + total) % total;
    const long long r = tau / n;
    const long long s = tau % n;

    cd acc{0.0, 0.0};
    for (long long i = 0; i < n; ++i) {
        const long long wrap = (s + i >= n) ? 1 : 0;
        const long long col = s + i - wrap * n;
        const cd d = b[h].entry(i) * std::conj(b[k].entry(col));
        const long long shift = ((r + wrap) % m + m) % m;
        cd inner{0.0, 0.0};
        for (long long l = 0; l < m; ++l)
            inner += a[i].entry(l) * std::conj(a[col].entry((l + shift) % m));
        acc += d * inner;
    }
    return acc;
}

}  // namespace zcz
