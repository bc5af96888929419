#pragma once

#include <optional>
#include <vector>

#include "tokenlab/graph.hpp"

namespace tokenlab {

/**
   Edge-preserving bijection g -> h, if one exists. `mapping[v-1]` is the
   image of vertex v.

   Backtracking over candidates with matching refined colors (degree, then
   iterated neighbor-color multisets). Intended for graphs up to roughly a
   hundred vertices; highly regular graphs that color refinement cannot
   split can make the search exponential.
 */
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff `mapping` is a bijection V(g) -> V(h) carrying E(g) onto E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping);

} // namespace tokenlab
