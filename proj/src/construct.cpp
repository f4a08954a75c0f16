#include "zcz/construct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zcz/correlate.hpp"
#include "zcz/interleave.hpp"

namespace zcz {
namespace {

long long mod_floor(long long v, long long m) {
    return ((v % m) + m) % m;
}

SequenceSet shifts_of(const Sequence& a, const ShiftSequence& e) {
    std::vector<Sequence> rows;
    rows.reserve(e.size());
    for (long long v : e.entries()) rows.push_back(left_shift(a, v));
    return SequenceSet(std::move(rows));
}

void require_perfect(const Sequence& a, const char* who) {
    if (!is_perfect(a)) throw HypothesisError(std::string(who) + ": sequence is not perfect");
}

}  // namespace

std::string theorem_tag_name(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::T1: return "T1";
        case TheoremTag::T1Case1: return "T1.1";
        case TheoremTag::T1Case2: return "T1.2";
        case TheoremTag::T2: return "T2";
        case TheoremTag::T3: return "T3";
        case TheoremTag::T3Case1: return "T3.1";
        case TheoremTag::T3Case2: return "T3.2";
        case TheoremTag::T4: return "T4";
        case TheoremTag::T5: return "T5";
        case TheoremTag::T5CondM: return "T5.1";
        case TheoremTag::T5CondN: return "T5.2";
    }
    return "?";
}

long long t1_r0(const ShiftSequence& e) {
    const std::vector<long long>& v = e.entries();
    if (v.empty()) throw HypothesisError("t1_r0: empty shift sequence");
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] >= v[i + 1]) throw HypothesisError("t1_r0: shift sequence must be strictly increasing");
    }
    long long r0 = e.modulus() + v.front() - v.back();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) r0 = std::min(r0, v[i + 1] - v[i] - 1);
    return r0;
}

BuildResult theorem1_build(const Sequence& a, const SequenceSet& b, const ShiftSequence& e) {
    const long long m = static_cast<long long>(a.length());
    const long long n = static_cast<long long>(b.size());
    if (m < n) throw HypothesisError("theorem1_build: need len(a) >= |B|");
    if (static_cast<long long>(e.size()) != n)
        throw HypothesisError("theorem1_build: shift sequence size must equal |B|");
    if (e.modulus() != m)
        throw HypothesisError("theorem1_build: shift modulus must equal len(a)");
    require_perfect(a, "theorem1_build");
    const long long r0 = t1_r0(e);

    SequenceSet s = interleave(shifts_of(a, e), b);

    TheoremClaim claim;
    claim.m = m;
    claim.n = n;
    claim.zcz = r0 * n + n - 2;
    claim.tag = TheoremTag::T1;
    if ((m + 1) % n == 0) {
        bool canonical = true;
        for (long long j = 0; j < n; ++j) canonical = canonical && e.entries()[j] == j * ((m + 1) / n);
        if (canonical) claim.tag = TheoremTag::T1Case1;
    }
    if (claim.tag == TheoremTag::T1 && t1_case2_condition(e, m, n)) claim.tag = TheoremTag::T1Case2;

    return {s.with_claim(SetClaim::zcz_claim(*claim.zcz)), claim};
}

ShiftSequence t1_canonical_shift(long long m, long long n, T1Variant variant, long long i) {
    if (n < 1 || m < n) throw HypothesisError("t1_canonical_shift: need 1 <= n <= m");
    std::vector<long long> v(static_cast<std::size_t>(n));
    if (variant == T1Variant::Case1) {
        if ((m + 1) % n != 0) throw HypothesisError("t1_canonical_shift: case1 needs n | (m+1)");
        for (long long j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j * ((m + 1) / n);
    } else {
        if (m % n != 0) throw HypothesisError("t1_canonical_shift: case2 needs n | m");
        if (i < 0 || i >= n) throw HypothesisError("t1_canonical_shift: case2 index must be in [0, n)");
        for (long long j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j * (m / n) + (j >= n - i ? 1 : 0);
        if (v.back() >= m)
            throw HypothesisError("t1_canonical_shift: shifts leave [0, m); case2 with m = n needs i = 0");
    }
    return ShiftSequence(std::move(v), m);
}

bool t1_case2_condition(const ShiftSequence& e, long long m, long long n) {
    if (n < 1 || m < n || m % n != 0) return false;
    if (static_cast<long long>(e.size()) != n || e.modulus() != m) return false;
    const std::vector<long long>& v = e.entries();
    const long long q = m / n;
    for (long long i1 = 1; i1 < n; ++i1) {
        for (long long i2 = 0; i2 < i1; ++i2) {
            const long long diff = v[static_cast<std::size_t>(i1)] - v[static_cast<std::size_t>(i2)];
            const long long lo = (i1 - i2) * q;
            if (diff < lo || diff > lo + 1) return false;
        }
    }
    return true;
}

BuildResult theorem2_build(const Sequence& a, const SequenceSet& b) {
    const long long m = static_cast<long long>(a.length());
    const long long n = static_cast<long long>(b.size());
    if (m < n) throw HypothesisError("theorem2_build: need len(a) >= |B|");
    require_perfect(a, "theorem2_build");

    std::vector<long long> v(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = m - 1 - j;
    SequenceSet s = interleave(shifts_of(a, ShiftSequence(std::move(v), m)), b);

    TheoremClaim claim;
    claim.tag = TheoremTag::T2;
    claim.m = m;
    claim.n = n;
    claim.zcz = n % m;

    // The reversed-shift claim is re-measured before a certificate is attached.
    const long long measured = measure_zcz(s);
    if (measured < *claim.zcz) {
        throw HypothesisError("theorem2_build: measured zone " + std::to_string(measured) +
                              " is below the claimed " + std::to_string(*claim.zcz));
    }
    return {s.with_claim(SetClaim::zcz_claim(*claim.zcz)), claim};
}

BuildResult theorem3_build(const SequenceSet& c, const SequenceSet& b, long long d) {
    const long long l = static_cast<long long>(c.size());
    const long long m = static_cast<long long>(c.length());
    const long long n = static_cast<long long>(b.size());

    long long zin = 0;
    if (c.claim()) {
        if (c.claim()->kind != SetClaim::Kind::Zcz)
            throw HypothesisError("theorem3_build: input set carries a maximal-correlation claim, not a zone");
        zin = c.claim()->zcz;
        const long long measured = measure_zcz(c);
        if (measured < zin) {
            throw HypothesisError("theorem3_build: input zone claim " + std::to_string(zin) +
                                  " exceeds the measured zone " + std::to_string(measured));
        }
    } else {
        zin = measure_zcz(c);
    }
    if (d < 0 || d >= zin) throw HypothesisError("theorem3_build: need 0 <= d < input zone");
    if (std::gcd(m, n + d) != 1) throw HypothesisError("theorem3_build: need gcd(m, n + d) = 1");

    std::vector<Sequence> out;
    out.reserve(static_cast<std::size_t>(l * n));
    for (long long k = 0; k < l; ++k) {
        const Sequence& ck = c[static_cast<std::size_t>(k)];
        std::vector<Sequence> cols;
        cols.reserve(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) {
            const long long offset = i + (i == n - 1 ? d : 0);
            if (ck.is_exact()) {
                std::vector<int> dig(static_cast<std::size_t>(m));
                for (long long j = 0; j < m; ++j)
                    dig[static_cast<std::size_t>(j)] = ck.digit(static_cast<std::size_t>(mod_floor(j * (n + d) + offset, m)));
                cols.push_back(Sequence::from_unit_digits(std::move(dig), ck.root_order(), ck.alphabet()));
            } else {
                std::vector<std::complex<double>> ent(static_cast<std::size_t>(m));
                for (long long j = 0; j < m; ++j)
                    ent[static_cast<std::size_t>(j)] = ck.entry(static_cast<std::size_t>(mod_floor(j * (n + d) + offset, m)));
                cols.push_back(Sequence::from_complex(std::move(ent)));
            }
        }
        SequenceSet sk = interleave(SequenceSet(std::move(cols)), b);
        for (const Sequence& row : sk.members()) out.push_back(row);
    }

    TheoremClaim claim;
    claim.m = m;
    claim.n = n;
    claim.d = d;
    claim.l = l;
    const long long r0 = (zin - d) / (n + d);
    const long long s0 = std::min(n - 1, zin - d - (n + d) * r0);
    claim.zcz = r0 * n + s0;
    if (l == 1 && zin == m - 1 && n > zin) {
        claim.tag = TheoremTag::T3Case2;
    } else if (d == 0) {
        claim.tag = TheoremTag::T3Case1;
    } else {
        claim.tag = TheoremTag::T3;
    }
    return {SequenceSet(std::move(out), SetClaim::zcz_claim(*claim.zcz)), claim};
}

BuildResult theorem4_build(const SequenceSet& a, const SequenceSet& b, bool trust_claim) {
    const long long n = static_cast<long long>(b.size());
    if (static_cast<long long>(a.size()) != n)
        throw HypothesisError("theorem4_build: |A| must equal |B|");
    if (!a.claim() || a.claim()->kind != SetClaim::Kind::Zcz)
        throw HypothesisError("theorem4_build: input set must carry a zone claim");
    const long long z = a.claim()->zcz;
    if (!trust_claim) {
        const long long measured = measure_zcz(a);
        if (measured < z) {
            throw HypothesisError("theorem4_build: input zone claim " + std::to_string(z) +
                                  " exceeds the measured zone " + std::to_string(measured));
        }
    }
    SequenceSet s = interleave(a, b);

    TheoremClaim claim;
    claim.tag = TheoremTag::T4;
    claim.m = static_cast<long long>(a.length());
    claim.n = n;
    claim.zcz = n * z;
    return {s.with_claim(SetClaim::zcz_claim(*claim.zcz)), claim};
}

long long t5_N0(const ShiftSequence& e, long long m, long long n) {
    if (static_cast<long long>(e.size()) != n || e.modulus() != m)
        throw HypothesisError("t5_N0: shift sequence shape mismatch");
    long long best = 0;
    for (long long r = 0; r < m; ++r) {
        for (long long s = 0; s < n; ++s) {
            if (r == 0 && s == 0) continue;
            long long count = 0;
            for (long long j = 0; j < n; ++j) {
                const long long diff = e.at(static_cast<std::size_t>(j + s)) - e.at(static_cast<std::size_t>(j));
                if (mod_floor(diff + r, m) == 0) ++count;
            }
            best = std::max(best, count);
        }
    }
    return best;
}

bool t5_condition_holds(const ShiftSequence& e, long long m, long long n, T5Condition cond) {
    if (static_cast<long long>(e.size()) != n || e.modulus() != m || n < 1) return false;
    const std::vector<long long>& v = e.entries();
    const long long base = cond == T5Condition::DistinctModM ? m : n;
    if (cond == T5Condition::DistinctModM) {
        if (m < n) return false;
    } else {
        if (m < 2 * n) return false;
        for (long long x : v)
            if (x >= n) return false;
    }
    for (long long s = 1; s < n; ++s) {
        std::set<long long> seen;
        for (long long j = 0; j + s < n; ++j) {
            const long long diff = mod_floor(v[static_cast<std::size_t>(j + s)] - v[static_cast<std::size_t>(j)], base);
            if (!seen.insert(diff).second) return false;
        }
    }
    return true;
}

BuildResult theorem5_build(const Sequence& a, const SequenceSet& b, const ShiftSequence& e) {
    const long long m = static_cast<long long>(a.length());
    const long long n = static_cast<long long>(b.size());
    if (static_cast<long long>(e.size()) != n)
        throw HypothesisError("theorem5_build: shift sequence size must equal |B|");
    if (e.modulus() != m)
        throw HypothesisError("theorem5_build: shift modulus must equal len(a)");
    require_perfect(a, "theorem5_build");
    for (const Sequence& row : b.members()) {
        for (const std::complex<double>& z : row.entries()) {
            if (std::abs(z) > 1.0 + kEntryEps)
                throw HypothesisError("theorem5_build: B entries must have modulus at most 1");
        }
    }

    SequenceSet s = interleave(shifts_of(a, e), b);

    TheoremClaim claim;
    claim.m = m;
    claim.n = n;
    claim.delta = static_cast<double>(t5_N0(e, m, n)) * energy(a);
    if (t5_condition_holds(e, m, n, T5Condition::DistinctModM)) {
        claim.tag = TheoremTag::T5CondM;
    } else if (t5_condition_holds(e, m, n, T5Condition::DistinctModN)) {
        claim.tag = TheoremTag::T5CondN;
    } else {
        claim.tag = TheoremTag::T5;
    }
    return {s.with_claim(SetClaim::delta_claim(*claim.delta)), claim};
}

ShiftSequence search_shift_sequence(long long m, long long n, T5Condition cond) {
    if (n < 1 || m < 1) throw HypothesisError("search_shift_sequence: need m, n >= 1");
    if (cond == T5Condition::DistinctModM && m < n)
        throw HypothesisError("search_shift_sequence: the mod-m condition needs m >= n");
    if (cond == T5Condition::DistinctModN && m < 2 * n)
        throw HypothesisError("search_shift_sequence: the mod-n condition needs m >= 2n");
    const long long range = cond == T5Condition::DistinctModM ? m : n;
    const long long base = range;

    std::vector<long long> cur;
    cur.reserve(static_cast<std::size_t>(n));
    // Candidates ascend at every depth, so the first completion is the
    // lexicographically smallest solution.
    std::function<bool()> extend = [&]() -> bool {
        const long long t = static_cast<long long>(cur.size());
        if (t == n) return true;
        for (long long v = 0; v < range; ++v) {
            bool ok = true;
            for (long long s = 1; s <= t && ok; ++s) {
                const long long dn = mod_floor(v - cur[static_cast<std::size_t>(t - s)], base);
                for (long long j = 0; j + s < t && ok; ++j) {
                    if (mod_floor(cur[static_cast<std::size_t>(j + s)] - cur[static_cast<std::size_t>(j)], base) == dn)
                        ok = false;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            if (extend()) return true;
            cur.pop_back();
        }
        return false;
    };
    if (!extend())
        throw HypothesisError("search_shift_sequence: no shift sequence satisfies the condition for m = " +
                              std::to_string(m) + ", n = " + std::to_string(n));
    return ShiftSequence(std::move(cur), m);
}

}  // namespace zcz
