#pragma once

#include "tokenlab/graph.hpp"

namespace tokenlab {

// Standard families. Each throws std::invalid_argument when the parameter
// is outside its domain.

/// P_m: edges {i, i+1}. m >= 1.
Graph path(int m);

/// C_m: path edges plus {1, m}. m >= 3.
Graph cycle(int m);

/// K_n. n >= 1.
Graph complete(int n);

/// F_{m,1} = P_m + K_1 with apex m+1. m >= 1.
Graph fan(int m);

/// W_{m,1} = C_m + K_1 with apex m+1. m >= 3.
Graph wheel(int m);

} // namespace tokenlab
