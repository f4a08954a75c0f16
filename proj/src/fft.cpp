#include "zcz/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace zcz::fft {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const cd wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            cd w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cd u = a[i + j];
                const cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp factors exp(-i*pi*k^2/N); k^2 taken mod 2N keeps the argument small.
std::vector<cd> chirp(std::size_t n) {
    std::vector<cd> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t sq = (k * k) % (2 * n);
        const double ang = -M_PI * static_cast<double>(sq) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

void bluestein(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (inverse) {
        for (auto& v : a) v = std::conj(v);
        bluestein(a, false);
        for (auto& v : a) v = std::conj(v) / static_cast<double>(n);
        return;
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    const auto w = chirp(n);
    std::vector<cd> x(m, cd{0.0, 0.0}), y(m, cd{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * w[k];
    y[0] = std::conj(w[0]);
    for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(w[k]);
    fft_pow2(x, false);
    fft_pow2(y, false);
    for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
    fft_pow2(x, true);
    for (std::size_t k = 0; k < m; ++k) x[k] /= static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * w[k];
}

}  // namespace

void transform(std::vector<cd>& data, bool inverse) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    if (data.size() == 1) return;
    if (is_pow2(data.size())) {
        fft_pow2(data, inverse);
        if (inverse)
            for (auto& v : data) v /= static_cast<double>(data.size());
        return;
    }
    bluestein(data, inverse);
}

std::vector<cd> periodic_cross_correlation(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("fft correlation: lengths differ");
    const std::size_t n = a.size();
    std::vector<cd> fa = a, fb = b;
    transform(fa, false);
    transform(fb, false);
    for (std::size_t k = 0; k < n; ++k) fa[k] *= std::conj(fb[k]);
    transform(fa, true);
    // fa now holds g[t] = sum_i a[i] conj(b[(i - t) mod N]); R(tau) = g[(N - tau) mod N].
    std::vector<cd> r(n);
    for (std::size_t tau = 0; tau < n; ++tau) r[tau] = fa[(n - tau) % n];
    return r;
}

}  // namespace zcz::fft
