#include "zcz/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "zcz/cyclotomic.hpp"

namespace zcz {

std::string Alphabet::str() const {
    switch (kind) {
        case AlphabetKind::PPhase: return std::to_string(p);
        case AlphabetKind::Ternary: return "ternary";
        case AlphabetKind::General: return "general";
    }
    return "general";
}

namespace {

std::vector<std::complex<double>> materialize(const std::vector<int>& digits, int order) {
    const auto& roots = unit_roots(order);
    std::vector<std::complex<double>> entries(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i)
        entries[i] = digits[i] < 0 ? std::complex<double>{0.0, 0.0} : roots[digits[i]];
    return entries;
}

}  // namespace

Sequence Sequence::from_unit_digits(std::vector<int> digits, int order) {
    if (order < 1) throw std::invalid_argument("Sequence: root order must be positive");
    if (digits.empty()) throw std::invalid_argument("Sequence: length must be at least 1");
    bool has_zero = false;
    for (int d : digits) {
        if (d == -1) { has_zero = true; continue; }
        if (d < 0 || d >= order) throw std::invalid_argument("Sequence: digit out of range");
    }
    Sequence s;
    s.order_ = order;
    if (!has_zero)
        s.alphabet_ = {AlphabetKind::PPhase, order};
    else if (order <= 2)
        s.alphabet_ = {AlphabetKind::Ternary, 0};
    else
        s.alphabet_ = {AlphabetKind::General, 0};
    s.entries_ = materialize(digits, order);
    s.digits_ = std::move(digits);
    return s;
}

Sequence Sequence::from_unit_digits(std::vector<int> digits, int order, Alphabet tag) {
    auto s = from_unit_digits(std::move(digits), order);
    s.alphabet_ = tag;
    return s;
}

Sequence Sequence::from_digits(std::vector<int> digits, int order) {
    for (int d : digits)
        if (d < 0) throw std::invalid_argument("Sequence: digit out of range");
    return from_unit_digits(std::move(digits), order);
}

Sequence Sequence::from_ternary(const std::vector<int>& trits) {
    std::vector<int> digits(trits.size());
    for (std::size_t i = 0; i < trits.size(); ++i) {
        switch (trits[i]) {
            case 1: digits[i] = 0; break;
            case -1: digits[i] = 1; break;
            case 0: digits[i] = -1; break;
            default: throw std::invalid_argument("Sequence: ternary entries must be +1, -1 or 0");
        }
    }
    auto s = from_unit_digits(std::move(digits), 2);
    s.alphabet_ = {AlphabetKind::Ternary, 0};
    return s;
}

Sequence Sequence::from_complex(std::vector<std::complex<double>> entries) {
    if (entries.empty()) throw std::invalid_argument("Sequence: length must be at least 1");
    Sequence s;
    s.alphabet_ = {AlphabetKind::General, 0};
    s.entries_ = std::move(entries);
    return s;
}

std::vector<int> Sequence::digits_at_order(int order) const {
    if (!is_exact() || order % order_ != 0)
        throw std::invalid_argument("Sequence: cannot lift digits to requested order");
    const int f = order / order_;
    std::vector<int> lifted(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i)
        lifted[i] = digits_[i] < 0 ? -1 : digits_[i] * f;
    return lifted;
}

bool Sequence::equals(const Sequence& other, double eps) const {
    if (length() != other.length()) return false;
    if (is_exact() && other.is_exact()) {
        const int common = static_cast<int>(std::lcm<long long>(order_, other.order_));
        return digits_at_order(common) == other.digits_at_order(common);
    }
    for (std::size_t i = 0; i < length(); ++i)
        if (std::abs(entries_[i] - other.entries_[i]) > eps) return false;
    return true;
}

Sequence left_shift(const Sequence& s, long long i) {
    const long long n = static_cast<long long>(s.length());
    const std::size_t k = static_cast<std::size_t>(((i % n) + n) % n);
    if (s.is_exact()) {
        std::vector<int> digits(s.length());
        for (std::size_t j = 0; j < s.length(); ++j) digits[j] = s.digit((j + k) % s.length());
        return Sequence::from_unit_digits(std::move(digits), s.root_order(), s.alphabet());
    }
    std::vector<std::complex<double>> entries(s.length());
    for (std::size_t j = 0; j < s.length(); ++j) entries[j] = s.entry((j + k) % s.length());
    return Sequence::from_complex(std::move(entries));
}

SequenceSet::SequenceSet(std::vector<Sequence> members, std::optional<SetClaim> claim)
    : members_(std::move(members)), claim_(std::move(claim)) {
    if (members_.empty()) throw std::invalid_argument("SequenceSet: at least one member required");
    for (const auto& m : members_)
        if (m.length() != members_.front().length())
            throw std::invalid_argument("SequenceSet: members must share one length");
}

bool SequenceSet::members_distinct(double eps) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (members_[i].equals(members_[j], eps)) return false;
    return true;
}

std::optional<int> SequenceSet::common_order() const {
    long long order = 1;
    for (const auto& m : members_) {
        if (!m.is_exact()) return std::nullopt;
        order = std::lcm(order, static_cast<long long>(m.root_order()));
    }
    return static_cast<int>(order);
}

Alphabet SequenceSet::common_alphabet() const {
    const auto order = common_order();
    if (!order) return {AlphabetKind::General, 0};
    bool has_zero = false;
    for (const auto& m : members_)
        for (int d : m.digits())
            if (d < 0) has_zero = true;
    if (!has_zero) return {AlphabetKind::PPhase, *order};
    if (*order <= 2) return {AlphabetKind::Ternary, 0};
    return {AlphabetKind::General, 0};
}

SequenceSet shift_set(const SequenceSet& s, long long i) {
    std::vector<Sequence> shifted;
    shifted.reserve(s.size());
    for (const auto& m : s.members()) shifted.push_back(left_shift(m, i));
    return SequenceSet(std::move(shifted), s.claim());
}

std::optional<long long> shift_equivalent(const Sequence& a, const Sequence& b, double eps) {
    if (a.length() != b.length())
        throw std::invalid_argument("shift_equivalent: lengths differ");
    for (long long k = 0; k < static_cast<long long>(a.length()); ++k)
        if (a.equals(left_shift(b, k), eps)) return k;
    return std::nullopt;
}

bool sets_shift_equivalent(const SequenceSet& a, const SequenceSet& b, double eps) {
    if (a.size() != b.size())
        throw std::invalid_argument("sets_shift_equivalent: set sizes differ");
    if (a.length() != b.length())
        throw std::invalid_argument("sets_shift_equivalent: lengths differ");
    for (long long k = 0; k < static_cast<long long>(a.length()); ++k) {
        bool all = true;
        for (std::size_t h = 0; h < a.size() && all; ++h)
            all = a[h].equals(left_shift(b[h], k), eps);
        if (all) return true;
    }
    return false;
}

ShiftSequence::ShiftSequence(std::vector<long long> entries, long long modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
    if (modulus_ < 1) throw std::invalid_argument("ShiftSequence: modulus must be positive");
    if (entries_.empty()) throw std::invalid_argument("ShiftSequence: at least one entry required");
    for (auto& e : entries_) e = ((e % modulus_) + modulus_) % modulus_;
}

}  // namespace zcz
