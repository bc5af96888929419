#pragma once

#include <vector>

#include "tokenlab/graph.hpp"

namespace tokenlab {

/// Disjoint union of g and h with every g-h edge added. h is relabeled
/// to g.order()+1 .. g.order()+h.order().
Graph join(const Graph& g, const Graph& h);

/// Same relabeling as join(), no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Cartesian product g □ h. Vertex (a, b) gets label (a-1)*h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/**
   G - X. Survivors are relabeled 1..(order - |X|) keeping their relative
   order; `original` maps back to labels of g. Deleting everything yields
   the empty graph.
 */
Subgraph delete_vertices(const Graph& g, const VertexSubset& x);

/// Subgraph induced by s; the complement form of delete_vertices().
Subgraph induced_subgraph(const Graph& g, const VertexSubset& s);

/// Connected components, ordered by their smallest original label.
std::vector<Subgraph> components(const Graph& g);

} // namespace tokenlab
