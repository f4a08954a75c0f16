#pragma once

#include <complex>

#include "zcz/sequence.hpp"

namespace zcz {

// Row-major read of the m x n matrix whose columns are the members of a:
// u[r*n + s] = a_s[r].
Sequence associate(const SequenceSet& a);

// s_h[i] = u[i] * b_h[i mod n] for each row b_h of the complete orthogonal
// set b; |a| must equal |b| and b is validated eagerly.
SequenceSet interleave(const SequenceSet& a, const SequenceSet& b);

// Correlation of interleaved outputs expressed through column-sequence
// correlations; the independent algebraic route the engine is checked against.
std::complex<double> prop1_correlation(const SequenceSet& a, const SequenceSet& b,
                                       std::size_t h, std::size_t k, long long tau);

}  // namespace zcz
