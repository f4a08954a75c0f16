#include "zcz/catalog.hpp"

#include <stdexcept>
#include <string>

#include "zcz/generators.hpp"

namespace zcz {
namespace {

BuildResult t1_witness(const char* perfect, int syl_t) {
    const Sequence a = builtin_perfect(perfect);
    const SequenceSet b = orthogonal_set(sylvester(syl_t));
    const long long m = static_cast<long long>(a.length());
    const long long n = static_cast<long long>(b.size());
    return theorem1_build(a, b, t1_canonical_shift(m, n, T1Variant::Case2, 0));
}

BuildResult t3_witness(const char* perfect, const SequenceSet& b) {
    return theorem3_build(SequenceSet({builtin_perfect(perfect)}), b, 1);
}

}  // namespace

const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = {
        {8, 2, 2, false, true, "t1 --perfect builtin:quad4 --hadamard sylvester:1 --variant case2:0"},
        {16, 4, 2, false, true, "t1 --perfect builtin:quad4 --hadamard sylvester:2 --variant case2:0"},
        {16, 2, 6, false, true, "t1 --perfect builtin:quad8 --hadamard sylvester:1 --variant case2:0"},
        {32, 4, 6, false, true, "t1 --perfect builtin:quad8 --hadamard sylvester:2 --variant case2:0"},
        {64, 8, 6, false, true, "t1 --perfect builtin:quad8 --hadamard sylvester:3 --variant case2:0"},
        {32, 2, 14, false, true, "t1 --perfect builtin:quad16 --hadamard sylvester:1 --variant case2:0"},
        {64, 4, 14, false, true, "t1 --perfect builtin:quad16 --hadamard sylvester:2 --variant case2:0"},
        {128, 8, 14, false, true, "t1 --perfect builtin:quad16 --hadamard sylvester:3 --variant case2:0"},
        {192, 12, 12, true, true, "t2 --perfect builtin:quad16 --hadamard h12"},
        {256, 16, 14, false, true, "t1 --perfect builtin:quad16 --hadamard sylvester:4 --variant case2:0"},
        {160, 20, 6, true, true, "t3 --perfect builtin:quad8 --hadamard paley:19 --d 1"},
        {320, 20, 14, true, true, "t3 --perfect builtin:quad16 --hadamard paley:19 --d 1"},
        {192, 24, 6, false, true, "t3 --perfect builtin:quad8 --hadamard paley:23 --d 1"},
        {384, 24, 14, true, true, "t3 --perfect builtin:quad16 --hadamard paley:23 --d 1"},
        {224, 28, 6, true, false, "needs a Hadamard matrix of order 28 (not provided)"},
        {448, 28, 14, true, false, "needs a Hadamard matrix of order 28 (not provided)"},
        {256, 32, 6, false, true, "t3 --perfect builtin:quad8 --hadamard sylvester:5 --d 1"},
        {512, 32, 14, false, true, "t3 --perfect builtin:quad16 --hadamard sylvester:5 --d 1"},
        {288, 36, 6, true, false, "needs a Hadamard matrix of order 36 (not provided)"},
        {576, 36, 14, true, false, "needs a Hadamard matrix of order 36 (not provided)"},
    };
    return rows;
}

BuildResult catalog_witness(std::size_t row) {
    const auto& rows = catalog_rows();
    if (row >= rows.size()) throw std::out_of_range("catalog_witness: row index out of range");
    if (!rows[row].constructible)
        throw HypothesisError("catalog_witness: row (" + std::to_string(rows[row].n) + ", " +
                              std::to_string(rows[row].m) + "; " + std::to_string(rows[row].zcz) + ") " +
                              rows[row].recipe);
    switch (row) {
        case 0: return t1_witness("quad4", 1);
        case 1: return t1_witness("quad4", 2);
        case 2: return t1_witness("quad8", 1);
        case 3: return t1_witness("quad8", 2);
        case 4: return t1_witness("quad8", 3);
        case 5: return t1_witness("quad16", 1);
        case 6: return t1_witness("quad16", 2);
        case 7: return t1_witness("quad16", 3);
        case 8: return theorem2_build(builtin_perfect("quad16"), orthogonal_set(hadamard12()));
        case 9: return t1_witness("quad16", 4);
        case 10: return t3_witness("quad8", orthogonal_set(paley(19)));
        case 11: return t3_witness("quad16", orthogonal_set(paley(19)));
        case 12: return t3_witness("quad8", orthogonal_set(paley(23)));
        case 13: return t3_witness("quad16", orthogonal_set(paley(23)));
        case 16: return t3_witness("quad8", orthogonal_set(sylvester(5)));
        case 17: return t3_witness("quad16", orthogonal_set(sylvester(5)));
        default: break;
    }
    throw std::logic_error("catalog_witness: unhandled row");
}

}  // namespace zcz
