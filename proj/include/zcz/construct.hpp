#pragma once

#include <optional>
#include <string>

#include "zcz/sequence.hpp"

namespace zcz {

// Construction rules. T1..T5 match the CLI's generate subcommand tokens;
// the .1/.2 variants are special cases with sharper claims.
enum class TheoremTag {
    T1,       // strictly increasing shifts, zone r0*n + n - 2
    T1Case1,  // n | (m+1), evenly spread shifts, zone m - 1 (meets the bound)
    T1Case2,  // n | m, banded shift gaps, zone m - 2
    T2,       // reversed shifts e_i = m-1-i, zone n mod m
    T3,       // decimated expansion of a ZCZ set, zone r0*n + s0
    T3Case1,  // d = 0 and gcd(m, n) = 1, zone preserved
    T3Case2,  // single perfect sequence with n > zone, zone m - 1 - d
    T4,       // interleaving an (m, n; Z) set multiplies the zone by n
    T5,       // low-correlation family, delta <= N0 * E_a
    T5CondM,  // shifted differences distinct mod m, delta <= 2 * E_a
    T5CondN,  // m >= 2n, differences distinct mod n, delta <= 2 * E_a
};

std::string theorem_tag_name(TheoremTag tag);

struct TheoremClaim {
    TheoremTag tag = TheoremTag::T1;
    long long m = 0;
    long long n = 0;
    std::optional<long long> d;
    std::optional<long long> l;
    std::optional<long long> zcz;  // zero-correlation-zone claims
    std::optional<double> delta;   // maximal-correlation claims
};

struct BuildResult {
    SequenceSet set;  // carries the matching SetClaim
    TheoremClaim claim;
};

// min(m + e_0 - e_{n-1}, min_i(e_{i+1} - e_i - 1)) for strictly increasing e.
long long t1_r0(const ShiftSequence& e);

// Interleaves the shifts L^{e_i}(a) of a perfect sequence with a complete
// orthogonal set; e must be strictly increasing in [0, m).
BuildResult theorem1_build(const Sequence& a, const SequenceSet& b, const ShiftSequence& e);

enum class T1Variant { Case1, Case2 };

// Case1 needs n | (m+1): e_j = j(m+1)/n. Case2 needs n | m: the first n-i
// entries are j*m/n, the rest j*m/n + 1.
ShiftSequence t1_canonical_shift(long long m, long long n, T1Variant variant, long long i = 0);

// Banded-gap test behind the T1.2 claim: every difference e_{i1} - e_{i2}
// lies in [(i1-i2)m/n, (i1-i2)m/n + 1]. False unless n divides m.
bool t1_case2_condition(const ShiftSequence& e, long long m, long long n);

// Reversed shifts e_i = m-1-i; zone claim n mod m, re-checked at build time.
BuildResult theorem2_build(const Sequence& a, const SequenceSet& b);

// Expands an (m, l; Z) set by decimated column reads; needs gcd(m, n+d) = 1
// and 0 <= d < Z. The input claim is re-verified.
BuildResult theorem3_build(const SequenceSet& c, const SequenceSet& b, long long d);

// Interleaves an (m, n; Z) set with an order-n orthogonal set; claim n*Z.
// The input claim is re-verified unless trusted.
BuildResult theorem4_build(const SequenceSet& a, const SequenceSet& b, bool trust_claim = false);

// max over (r, s) != (0, 0) of #{j in [0, n) : e_{j+s} - e_j + r = 0 mod m},
// with e read through the extended accessor when j + s >= n.
long long t5_N0(const ShiftSequence& e, long long m, long long n);

// DistinctModM: entries in [0, m), m >= n, and for each 1 <= s < n the
// differences (e_{j+s} - e_j) mod m over j < n-s are pairwise distinct.
// DistinctModN: entries in [0, n), m >= 2n, differences distinct mod n.
enum class T5Condition { DistinctModM, DistinctModN };

bool t5_condition_holds(const ShiftSequence& e, long long m, long long n, T5Condition cond);

// Arbitrary-shift interleaving with a maximal-correlation claim N0 * E_a;
// B entries must have modulus at most 1.
BuildResult theorem5_build(const Sequence& a, const SequenceSet& b, const ShiftSequence& e);

// Lexicographically smallest shift sequence satisfying the condition, found
// by backtracking; throws when none exists.
ShiftSequence search_shift_sequence(long long m, long long n, T5Condition cond);

}  // namespace zcz
