#pragma once

#include <string>
#include <vector>

#include "tokenlab/graph.hpp"
#include "tokenlab/token.hpp"

namespace tokenlab {

struct DotOptions {
  std::string name = "G";
  /// Vertices drawn filled and tagged `witness=true`.
  std::vector<Vertex> highlight;
};

/// One `graph NAME { ... }` block; vertex labels are the node ids.
std::string to_dot(const Graph& g, const DotOptions& options = {});

/// Same as above, with each token written as the node's `label` attribute.
std::string to_dot(const DerivedGraph& dg, const DotOptions& options = {});

/**
   Golden-stable JSON:
     {"order": 3, "edges": [[1,2], [2,3]]}
   Edges have u < v and are sorted lexicographically.
 */
std::string to_json(const Graph& g);

/// Graph schema followed by `"kind"` and `"labels"` (one array per vertex).
std::string to_json(const DerivedGraph& dg);

/// [[1,2], [1,4]]
std::string tokens_to_json(const std::vector<TokenVertex>& tokens);

} // namespace tokenlab
