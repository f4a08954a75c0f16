#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "zcz/sequence.hpp"

namespace zcz {

// Catalog entries: tri9 (three-phase, length 9), quad16, quad8 and quad4
// (quadriphase), ternary13 (length 13, energy 9).
Sequence builtin_perfect(std::string_view name);

// Polyphase perfect sequence of any length n >= 1; u must be coprime to n.
// Entries are roots of unity of order dividing 2n.
Sequence chu_perfect(long long n, long long u);

class HadamardMatrix {
  public:
    HadamardMatrix(int order, std::vector<std::int8_t> entries);

    int order() const { return order_; }
    int at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * order_ + c]; }

  private:
    int order_;
    std::vector<std::int8_t> entries_;  // +1 / -1, row-major
};

// Kronecker powers of the order-2 matrix; order 2^t.
HadamardMatrix sylvester(int t);

// Quadratic-residue construction; q must be an odd prime with q % 4 == 3,
// giving order q + 1.
HadamardMatrix paley(int q);

// Fixed order-12 matrix (circulant core bordered by an all-ones row).
HadamardMatrix hadamard12();

// Rows as a binary sequence set; passes is_complete_orthogonal.
SequenceSet orthogonal_set(const HadamardMatrix& h);

}  // namespace zcz
