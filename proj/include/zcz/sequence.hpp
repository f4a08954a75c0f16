#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zcz/common.hpp"

namespace zcz {

enum class AlphabetKind { PPhase, Ternary, General };

struct Alphabet {
    AlphabetKind kind = AlphabetKind::General;
    int p = 0;  // root-of-unity order for PPhase

    std::string str() const;
};

// A periodic complex sequence. Sequences whose entries are zero or roots of
// unity of a common order additionally carry a digit representation that
// supports exact correlation arithmetic: digit d >= 0 encodes exp(2*pi*i*d/order),
// digit -1 encodes a zero entry.
class Sequence {
  public:
    static Sequence from_digits(std::vector<int> digits, int order);
    static Sequence from_ternary(const std::vector<int>& trits);  // entries in {+1, -1, 0}
    static Sequence from_complex(std::vector<std::complex<double>> entries);
    // Digits may include -1 zero markers; the alphabet tag is derived.
    static Sequence from_unit_digits(std::vector<int> digits, int order);
    static Sequence from_unit_digits(std::vector<int> digits, int order, Alphabet tag);

    std::size_t length() const { return entries_.size(); }
    const std::vector<std::complex<double>>& entries() const { return entries_; }
    std::complex<double> entry(std::size_t i) const { return entries_[i]; }

    bool is_exact() const { return order_ > 0; }
    int root_order() const { return order_; }
    const std::vector<int>& digits() const { return digits_; }
    int digit(std::size_t i) const { return digits_[i]; }
    const Alphabet& alphabet() const { return alphabet_; }

    // Digit vector re-expressed over a multiple of the current order.
    std::vector<int> digits_at_order(int order) const;

    bool equals(const Sequence& other, double eps = kEntryEps) const;

  private:
    Sequence() = default;

    Alphabet alphabet_;
    int order_ = 0;  // 0 on the floating path
    std::vector<int> digits_;
    std::vector<std::complex<double>> entries_;
};

// Cyclic left shift: result[k] = s[(k + i) mod N].
Sequence left_shift(const Sequence& s, long long i);

struct SetClaim {
    enum class Kind { Zcz, Delta };
    Kind kind = Kind::Zcz;
    long long zcz = 0;
    double delta = 0.0;

    static SetClaim zcz_claim(long long z) { return {Kind::Zcz, z, 0.0}; }
    static SetClaim delta_claim(double d) { return {Kind::Delta, 0, d}; }
};

// An ordered set of equal-length sequences, optionally carrying a claimed
// zero-correlation-zone width or maximal-correlation bound.
class SequenceSet {
  public:
    explicit SequenceSet(std::vector<Sequence> members, std::optional<SetClaim> claim = std::nullopt);

    std::size_t size() const { return members_.size(); }
    std::size_t length() const { return members_.front().length(); }
    const Sequence& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Sequence>& members() const { return members_; }

    const std::optional<SetClaim>& claim() const { return claim_; }
    SequenceSet with_claim(SetClaim c) const { return SequenceSet(members_, c); }

    bool members_distinct(double eps = kEntryEps) const;
    // Smallest common root order when every member is digit-backed.
    std::optional<int> common_order() const;
    Alphabet common_alphabet() const;

  private:
    std::vector<Sequence> members_;
    std::optional<SetClaim> claim_;
};

// Applies the same cyclic left shift to every member; claim is preserved.
SequenceSet shift_set(const SequenceSet& s, long long i);

// Smallest k in [0, N) with a == left_shift(b, k), if any.
std::optional<long long> shift_equivalent(const Sequence& a, const Sequence& b, double eps = kEntryEps);

// True when some single shift maps every member of b onto the same-index member of a.
bool sets_shift_equivalent(const SequenceSet& a, const SequenceSet& b, double eps = kEntryEps);

// Shift exponents e_0..e_{n-1} over a modulus m with the periodic extension
// e_{i+n} = e_i + 1 (extension values are not reduced mod m).
class ShiftSequence {
  public:
    ShiftSequence(std::vector<long long> entries, long long modulus);

    std::size_t size() const { return entries_.size(); }
    long long modulus() const { return modulus_; }
    const std::vector<long long>& entries() const { return entries_; }
    long long at(std::size_t i) const {
        const std::size_t n = entries_.size();
        return entries_[i % n] + static_cast<long long>(i / n);
    }

  private:
    std::vector<long long> entries_;
    long long modulus_;
};

}  // namespace zcz
