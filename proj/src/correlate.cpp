#include "zcz/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "zcz/cyclotomic.hpp"
#include "zcz/fft.hpp"

namespace zcz {

namespace {

using cd = std::complex<double>;

constexpr std::size_t kDirectLimit = 4096;  // Auto switches to the transform above this

// Digit views lifted to a shared root order; empty when any member is float-backed.
struct ExactView {
    int order = 0;
    std::vector<std::vector<int>> digits;
    bool ok() const { return order > 0; }
};

ExactView exact_view(const std::vector<const Sequence*>& seqs) {
    long long order = 1;
    for (const auto* s : seqs) {
        if (!s->is_exact()) return {};
        order = std::lcm(order, static_cast<long long>(s->root_order()));
        if (order > (1 << 20)) return {};
    }
    ExactView v;
    v.order = static_cast<int>(order);
    v.digits.reserve(seqs.size());
    for (const auto* s : seqs) v.digits.push_back(s->digits_at_order(v.order));
    return v;
}

ExactView exact_view(const SequenceSet& s) {
    std::vector<const Sequence*> ptrs;
    ptrs.reserve(s.size());
    for (const auto& m : s.members()) ptrs.push_back(&m);
    return exact_view(ptrs);
}

CycValue exact_corr_at(const std::vector<int>& da, const std::vector<int>& db, int order, std::size_t tau) {
    const std::size_t n = da.size();
    CycValue v(order);
    std::size_t j = tau;
    for (std::size_t i = 0; i < n; ++i) {
        const int x = da[i];
        const int y = db[j];
        if (x >= 0 && y >= 0) v.add_root(x >= y ? x - y : x - y + order);
        if (++j == n) j = 0;
    }
    return v;
}

cd float_corr_at(const std::vector<cd>& ea, const std::vector<cd>& eb, std::size_t tau) {
    const std::size_t n = ea.size();
    cd acc{0.0, 0.0};
    std::size_t j = tau;
    for (std::size_t i = 0; i < n; ++i) {
        acc += ea[i] * std::conj(eb[j]);
        if (++j == n) j = 0;
    }
    return acc;
}

enum class Route { ExactDirect, FloatDirect, Fft };

Route resolve(CorrMethod method, bool exact_ok, std::size_t n) {
    switch (method) {
        case CorrMethod::Direct: return exact_ok ? Route::ExactDirect : Route::FloatDirect;
        case CorrMethod::Fft: return Route::Fft;
        case CorrMethod::Auto: break;
    }
    if (n > kDirectLimit) return Route::Fft;
    return exact_ok ? Route::ExactDirect : Route::FloatDirect;
}

// Zero tests and full profiles for one pair of members under a chosen route.
struct PairScanner {
    Route route;
    int order = 0;
    const std::vector<int>* da = nullptr;
    const std::vector<int>* db = nullptr;
    const std::vector<cd>* ea = nullptr;
    const std::vector<cd>* eb = nullptr;
    double tol = 0.0;
    std::vector<cd> profile_cache;

    bool zero_at(std::size_t tau) {
        switch (route) {
            case Route::ExactDirect: return exact_corr_at(*da, *db, order, tau).is_zero();
            case Route::FloatDirect: return std::abs(float_corr_at(*ea, *eb, tau)) <= tol;
            case Route::Fft:
                if (profile_cache.empty()) profile_cache = fft::periodic_cross_correlation(*ea, *eb);
                return std::abs(profile_cache[tau]) <= tol;
        }
        return false;
    }

    std::vector<cd> values() {
        const std::size_t n = ea->size();
        switch (route) {
            case Route::ExactDirect: {
                std::vector<cd> out(n);
                for (std::size_t tau = 0; tau < n; ++tau)
                    out[tau] = exact_corr_at(*da, *db, order, tau).to_complex();
                return out;
            }
            case Route::FloatDirect: {
                std::vector<cd> out(n);
                for (std::size_t tau = 0; tau < n; ++tau) out[tau] = float_corr_at(*ea, *eb, tau);
                return out;
            }
            case Route::Fft:
                if (profile_cache.empty()) profile_cache = fft::periodic_cross_correlation(*ea, *eb);
                return profile_cache;
        }
        return {};
    }
};

PairScanner make_scanner(Route route, const ExactView& view, const SequenceSet& s, std::size_t h, std::size_t k) {
    PairScanner sc;
    sc.route = route;
    sc.ea = &s[h].entries();
    sc.eb = &s[k].entries();
    sc.tol = corr_tolerance(s.length());
    if (route == Route::ExactDirect) {
        sc.order = view.order;
        sc.da = &view.digits[h];
        sc.db = &view.digits[k];
    }
    return sc;
}

}  // namespace

double energy(const Sequence& s) {
    if (s.is_exact()) {
        long long nz = 0;
        for (int d : s.digits())
            if (d >= 0) ++nz;
        return static_cast<double>(nz);
    }
    double acc = 0.0;
    for (const auto& v : s.entries()) acc += std::norm(v);
    return acc;
}

CorrelationProfile cross_correlation(const Sequence& a, const Sequence& b, CorrMethod method) {
    if (a.length() != b.length())
        throw std::invalid_argument("cross_correlation: lengths differ");
    const auto view = exact_view(std::vector<const Sequence*>{&a, &b});
    const Route route = resolve(method, view.ok(), a.length());
    CorrelationProfile p;
    if (route == Route::Fft) {
        p.values = fft::periodic_cross_correlation(a.entries(), b.entries());
    } else if (route == Route::ExactDirect) {
        p.values.resize(a.length());
        for (std::size_t tau = 0; tau < a.length(); ++tau)
            p.values[tau] = exact_corr_at(view.digits[0], view.digits[1], view.order, tau).to_complex();
    } else {
        p.values.resize(a.length());
        for (std::size_t tau = 0; tau < a.length(); ++tau)
            p.values[tau] = float_corr_at(a.entries(), b.entries(), tau);
    }
    return p;
}

bool is_perfect(const Sequence& s, CorrMethod method) {
    const auto view = exact_view(std::vector<const Sequence*>{&s});
    const Route route = resolve(method, view.ok(), s.length());
    const double tol = corr_tolerance(s.length());
    if (route == Route::ExactDirect) {
        for (std::size_t tau = 1; tau < s.length(); ++tau)
            if (!exact_corr_at(view.digits[0], view.digits[0], view.order, tau).is_zero()) return false;
        return true;
    }
    if (route == Route::Fft) {
        const auto prof = fft::periodic_cross_correlation(s.entries(), s.entries());
        for (std::size_t tau = 1; tau < s.length(); ++tau)
            if (std::abs(prof[tau]) > tol) return false;
        return true;
    }
    for (std::size_t tau = 1; tau < s.length(); ++tau)
        if (std::abs(float_corr_at(s.entries(), s.entries(), tau)) > tol) return false;
    return true;
}

bool is_complete_orthogonal(const SequenceSet& b, CorrMethod method) {
    if (b.size() != b.length()) return false;
    const auto view = exact_view(b);
    const Route route = resolve(method, view.ok(), b.length());
    const double tol = corr_tolerance(b.length());
    for (std::size_t h = 0; h < b.size(); ++h) {
        if (energy(b[h]) <= 0.0) return false;
        for (std::size_t k = h + 1; k < b.size(); ++k) {
            if (route == Route::ExactDirect) {
                if (!exact_corr_at(view.digits[h], view.digits[k], view.order, 0).is_zero()) return false;
            } else {
                if (std::abs(float_corr_at(b[h].entries(), b[k].entries(), 0)) > tol) return false;
            }
        }
    }
    return true;
}

long long measure_zcz(const SequenceSet& s, CorrMethod method) {
    if (!s.members_distinct())
        throw HypothesisError("measure_zcz: set contains duplicate members");
    const auto view = exact_view(s);
    const Route route = resolve(method, view.ok(), s.length());
    const long long n = static_cast<long long>(s.length());
    const std::size_t m = s.size();

    if (route == Route::Fft) {
        long long zone = n - 1;
        for (std::size_t h = 0; h < m && zone >= 0; ++h) {
            for (std::size_t k = 0; k < m && zone >= 0; ++k) {
                auto sc = make_scanner(route, view, s, h, k);
                const auto prof = sc.values();
                const double tol = corr_tolerance(s.length());
                for (long long tau = (h == k) ? 1 : 0; tau <= zone; ++tau) {
                    if (std::abs(prof[tau]) > tol) {
                        zone = tau - 1;
                        break;
                    }
                }
            }
        }
        return std::max<long long>(zone, 0);
    }

    // direct routes scan lags outward and stop at the first violation
    for (long long tau = 0; tau < n; ++tau) {
        for (std::size_t h = 0; h < m; ++h) {
            for (std::size_t k = 0; k < m; ++k) {
                if (tau == 0 && h == k) continue;
                auto sc = make_scanner(route, view, s, h, k);
                if (!sc.zero_at(tau)) return std::max<long long>(tau - 1, 0);
            }
        }
    }
    return n - 1;
}

double max_correlation(const SequenceSet& s, CorrMethod method) {
    const auto view = exact_view(s);
    const Route route = resolve(method, view.ok(), s.length());
    double best = 0.0;
    for (std::size_t h = 0; h < s.size(); ++h) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto sc = make_scanner(route, view, s, h, k);
            if (route == Route::ExactDirect) {
                for (std::size_t tau = (h == k) ? 1 : 0; tau < s.length(); ++tau)
                    best = std::max(best, exact_corr_at(*sc.da, *sc.db, sc.order, tau).magnitude());
            } else {
                const auto prof = sc.values();
                for (std::size_t tau = (h == k) ? 1 : 0; tau < s.length(); ++tau)
                    best = std::max(best, std::abs(prof[tau]));
            }
        }
    }
    return best;
}

Rational zcz_bound(long long n, long long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("zcz_bound: N and M must be positive");
    return Rational(n - m, m);
}

ZczReport verify(const SequenceSet& s, const VerifyOptions& options) {
    ZczReport rep;
    rep.n = static_cast<long long>(s.length());
    rep.m = static_cast<long long>(s.size());
    rep.bound = zcz_bound(rep.n, rep.m);
    rep.claim = s.claim();

    const auto view = exact_view(s);

    if (options.sample_pairs) {
        // all autocorrelations plus seeded cross pairs, via the transform path
        if (!s.members_distinct())
            throw HypothesisError("verify: set contains duplicate members");
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t h = 0; h < s.size(); ++h) pairs.emplace_back(h, h);
        std::vector<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t h = 0; h < s.size(); ++h)
            for (std::size_t k = 0; k < s.size(); ++k)
                if (h != k) cross.emplace_back(h, k);
        std::mt19937_64 rng(options.seed);
        const std::size_t want = std::min<std::size_t>(cross.size(), static_cast<std::size_t>(*options.sample_pairs));
        for (std::size_t i = 0; i < want; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (cross.size() - i));
            std::swap(cross[i], cross[j]);
            pairs.push_back(cross[i]);
        }
        rep.exhaustive = false;
        rep.exact = false;
        rep.tolerance = corr_tolerance(s.length());
        rep.pairs_checked = static_cast<long long>(pairs.size());
        long long zone = rep.n - 1;
        double delta = 0.0;
        bool peak_ok = true;
        for (const auto& [h, k] : pairs) {
            auto sc = make_scanner(Route::Fft, view, s, h, k);
            const auto prof = sc.values();
            const double tol = rep.tolerance;
            if (h == k && std::abs(prof[0] - cd{energy(s[h]), 0.0}) > tol) peak_ok = false;
            for (long long tau = (h == k) ? 1 : 0; tau < rep.n; ++tau) {
                const double mag = std::abs(prof[tau]);
                delta = std::max(delta, mag);
                if (tau <= zone && mag > tol) zone = tau - 1;
            }
        }
        rep.measured_zcz = std::max<long long>(zone, 0);
        rep.peak_ok = peak_ok;
        if (options.compute_delta) rep.delta = delta;
    } else {
        const Route route = resolve(options.method, view.ok(), s.length());
        rep.exact = route == Route::ExactDirect;
        rep.tolerance = rep.exact ? 0.0 : corr_tolerance(s.length());
        rep.pairs_checked = rep.m * rep.m;
        rep.measured_zcz = measure_zcz(s, options.method);
        if (options.compute_delta) rep.delta = max_correlation(s, options.method);
        bool peak_ok = true;
        for (std::size_t h = 0; h < s.size(); ++h) {
            const double e = energy(s[h]);
            if (route == Route::ExactDirect) {
                const auto v = exact_corr_at(view.digits[h], view.digits[h], view.order, 0).as_integer();
                if (!v || static_cast<double>(*v) != e) peak_ok = false;
            } else if (std::abs(float_corr_at(s[h].entries(), s[h].entries(), 0) - cd{e, 0.0}) >
                       corr_tolerance(s.length())) {
                peak_ok = false;
            }
        }
        rep.peak_ok = peak_ok;
    }

    rep.achieves_bound = rep.measured_zcz == rep.bound.floor();
    if (rep.claim) {
        if (rep.claim->kind == SetClaim::Kind::Zcz)
            rep.claim_satisfied = rep.measured_zcz >= rep.claim->zcz;
        else if (rep.delta)
            rep.claim_satisfied = *rep.delta <= rep.claim->delta + kDeltaTol;
    }
    return rep;
}

}  // namespace zcz
