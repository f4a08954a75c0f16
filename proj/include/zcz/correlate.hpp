#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "zcz/common.hpp"
#include "zcz/sequence.hpp"

namespace zcz {

// Maximal-correlation comparisons match two-decimal reporting.
inline constexpr double kDeltaTol = 1e-2;

enum class CorrMethod {
    Auto,    // exact/direct up to moderate lengths, transform beyond
    Direct,  // O(N^2) time-domain evaluation (exact on digit-backed pairs)
    Fft,     // O(N log N) transform evaluation, tolerance-based zero tests
};

struct CorrelationProfile {
    std::vector<std::complex<double>> values;  // R(tau), tau in [0, N)
    int h = -1;  // source pair when taken from a set
    int k = -1;
};

// Sum of squared entry magnitudes; an integer count on the digit path.
double energy(const Sequence& s);

// Periodic cross-correlation R(tau) = sum_i a[i] * conj(b[(i + tau) mod N]).
CorrelationProfile cross_correlation(const Sequence& a, const Sequence& b,
                                     CorrMethod method = CorrMethod::Auto);

// All off-peak autocorrelations vanish.
bool is_perfect(const Sequence& s, CorrMethod method = CorrMethod::Auto);

// M == N and all pairwise lag-0 inner products vanish.
bool is_complete_orthogonal(const SequenceSet& b, CorrMethod method = CorrMethod::Auto);

// Largest Z >= 0 with R_{h}(tau) = 0 for 1 <= tau <= Z and R_{h,k}(tau) = 0
// for 0 <= tau <= Z, h != k. Duplicate members are rejected.
long long measure_zcz(const SequenceSet& s, CorrMethod method = CorrMethod::Auto);

// max |R_{h,k}(tau)| over all pairs and lags, excluding tau = 0 with h = k.
double max_correlation(const SequenceSet& s, CorrMethod method = CorrMethod::Auto);

// Upper bound Zcz <= N/M - 1 as an exact rational.
Rational zcz_bound(long long n, long long m);

struct VerifyOptions {
    CorrMethod method = CorrMethod::Auto;
    bool compute_delta = true;
    // When set, checks all autocorrelations plus this many seeded cross pairs
    // via the transform path instead of every pair.
    std::optional<long long> sample_pairs;
    unsigned long long seed = 0;
};

struct ZczReport {
    long long n = 0;
    long long m = 0;
    long long measured_zcz = 0;
    std::optional<double> delta;
    Rational bound;
    bool achieves_bound = false;
    double tolerance = 0.0;  // 0 on the exact path
    bool exact = false;
    bool exhaustive = true;
    long long pairs_checked = 0;
    bool peak_ok = false;  // R_hh(0) equals the member energy
    std::optional<SetClaim> claim;
    std::optional<bool> claim_satisfied;
};

ZczReport verify(const SequenceSet& s, const VerifyOptions& options = {});

}  // namespace zcz
