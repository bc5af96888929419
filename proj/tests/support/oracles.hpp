#pragma once

// Test-only reference computations. Nothing here calls the code paths
// they are used to check.

#include <set>
#include <utility>
#include <vector>

#include "tokenlab/graph.hpp"

namespace oracle {

using tokenlab::Graph;
using tokenlab::Vertex;

/// Maximum independent set size by scanning every subset. n <= 22.
int exhaustive_alpha(const Graph& g);

/// Whether any single subset of size `size` is independent (full scan).
bool has_independent_set(const Graph& g, int size);

/// Edge list of F_2(g) from the "share one element, other two adjacent"
/// rule, on labels written as (a, b) pairs with a < b.
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> double_vertex_edges(const Graph& g);

/// Edge list of C(g) by trying every way of writing both multisets as
/// {shared, rest}.
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> pair_graph_edges(const Graph& g);

/// Same shape as above, read off a constructed graph through its labels.
template <typename Derived>
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> labeled_edges(const Derived& dg) {
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (const auto& e : dg.graph().edges()) {
    const auto& a = dg.label_of(e.u);
    const auto& b = dg.label_of(e.v);
    std::pair<int, int> pa{a.first(), a.last()}, pb{b.first(), b.last()};
    if (pb < pa)
      std::swap(pa, pb);
    out.emplace(pa, pb);
  }
  return out;
}

/// Simple random graph for property tests (seeded linear congruential).
Graph random_graph(unsigned long long& state, int n, int permille);

} // namespace oracle
