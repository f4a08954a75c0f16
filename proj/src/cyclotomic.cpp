#include "zcz/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace zcz {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<long long> poly_divide(const std::vector<long long>& num, const std::vector<long long>& den) {
    std::vector<long long> rem = num;
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
        const long long c = rem[d];
        if (c == 0) continue;
        const int shift = d - static_cast<int>(den.size()) + 1;
        quot[shift] = c;  // divisors here are monic
        for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    }
    return quot;
}

std::vector<long long> compute_cyclotomic(int n) {
    // (x^n - 1) divided by the cyclotomic polynomials of all proper divisors.
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = poly_divide(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

std::mutex g_phi_mutex;
std::unordered_map<int, std::vector<long long>> g_phi_cache;

std::mutex g_roots_mutex;
std::unordered_map<int, std::vector<std::complex<double>>> g_roots_cache;

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

const std::vector<std::complex<double>>& unit_roots(int n) {
    if (n < 1) throw std::invalid_argument("unit_roots: order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_roots_mutex);
        auto it = g_roots_cache.find(n);
        if (it != g_roots_cache.end()) return it->second;
    }
    std::vector<std::complex<double>> roots(n);
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * M_PI * k / n;
        roots[k] = {std::cos(ang), std::sin(ang)};
    }
    std::lock_guard<std::mutex> lock(g_roots_mutex);
    return g_roots_cache.emplace(n, std::move(roots)).first->second;
}

CycValue::CycValue(int order, std::vector<long long> counts) : order_(order), counts_(std::move(counts)) {
    if (order_ < 1 || counts_.size() != static_cast<std::size_t>(order_))
        throw std::invalid_argument("CycValue: counts size must equal order");
}

void CycValue::negate() {
    for (auto& c : counts_) c = -c;
}

std::vector<long long> CycValue::reduced() const {
    const auto& phi = cyclotomic_polynomial(order_);
    std::vector<long long> rem = counts_;
    const int deg_phi = static_cast<int>(phi.size()) - 1;
    for (int d = static_cast<int>(rem.size()) - 1; d >= deg_phi; --d) {
        const long long c = rem[d];
        if (c == 0) continue;
        const int shift = d - deg_phi;
        for (int i = 0; i <= deg_phi; ++i) rem[shift + i] -= c * phi[i];
    }
    rem.resize(deg_phi);
    return rem;
}

bool CycValue::is_zero() const {
    for (long long c : reduced())
        if (c != 0) return false;
    return true;
}

std::optional<long long> CycValue::as_integer() const {
    const auto rem = reduced();
    for (std::size_t i = 1; i < rem.size(); ++i)
        if (rem[i] != 0) return std::nullopt;
    return rem.empty() ? 0 : rem[0];
}

std::complex<double> CycValue::to_complex() const {
    const auto& roots = unit_roots(order_);
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < order_; ++k)
        if (counts_[k] != 0) acc += static_cast<double>(counts_[k]) * roots[k];
    return acc;
}

double CycValue::magnitude() const {
    if (auto v = as_integer()) return static_cast<double>(*v < 0 ? -*v : *v);
    return std::abs(to_complex());
}

}  // namespace zcz
