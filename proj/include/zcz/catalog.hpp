#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zcz/construct.hpp"

namespace zcz {

// Best-known quadriphase (N, M; Zcz) parameter triples reproducible by the
// bundled construction rules.
struct CatalogRow {
    long long n = 0;    // sequence length N
    long long m = 0;    // set size M
    long long zcz = 0;  // zone width
    bool exclusive = false;     // reachable by these rules only
    bool constructible = true;  // a witness builder exists with the bundled generators
    std::string recipe;
};

const std::vector<CatalogRow>& catalog_rows();

// Builds the witness set for a row; throws HypothesisError for rows whose
// construction needs a Hadamard order the generators do not provide.
BuildResult catalog_witness(std::size_t row);

}  // namespace zcz
