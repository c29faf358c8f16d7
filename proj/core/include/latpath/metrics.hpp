#pragma once

#include "latpath/polytope.hpp"

namespace latpath {

/// Distinct-value counts of each row functional over the vertex set. A
/// polytope is `overall`-level and no less.
struct LevelProfile {
    std::vector<int> per_row;
    int overall = 0;
};

LevelProfile level_profile(const Polytope& p);

struct MatrixMetrics {
    Int a_inf = 0;                  // max |entry| over all rows
    int max_support = 0;            // max nonzeros in a row
    std::optional<Int> max_subdet;  // brute force; skipped above the size threshold
};

/// Subdeterminant enumeration is brute force over all square submatrices and
/// is skipped (nullopt) when n > 5, the row count exceeds 24, or the caller
/// opts out.
MatrixMetrics matrix_metrics(const HRep& h, bool with_subdet = true);

}  // namespace latpath
